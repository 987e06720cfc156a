"""Command-line surface: braid I/O, one-shot computations, experiment runner.

Braid words on the wire are whitespace-separated signed integers (the sign
is the crossing sign), with optional tokens ``D`` / ``D-`` for the positive
and negative half-twist; the strand count always comes from ``--n``.

Exit codes: 0 success, 2 parse error, 3 invalid parameters.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import permutations as pm
from .census import SampleConfig, count_ball, count_sphere, growth_rate, sample_ball, sample_spheres
from .conjugacy import (
    CERTIFIED,
    CONJUGATE,
    NOT_CONJUGATE,
    fast_rigid_conjugate,
    solve_conjugacy,
    strict_witness_patterns,
)
from .experiments import (
    EXPERIMENT_KINDS,
    UndefinedFitError,
    fit_decay,
    rows_to_csv,
    rows_to_json,
    run_experiment,
)
from .normal import NormalForm, normalize, render
from .simple import ArtinWord


class WordParseError(ValueError):
    """Malformed braid word on the command line."""


def parse_braid_word(text: str, n: int) -> ArtinWord:
    """Parse the wire format into an ArtinWord (D tokens expanded)."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    delta_letters = list(pm.canonical_word(pm.delta_perm(n)))
    letters: list[int] = []
    for tok in text.split():
        if tok == "D":
            letters.extend(delta_letters)
        elif tok == "D-":
            letters.extend(-i for i in reversed(delta_letters))
        else:
            try:
                x = int(tok)
            except ValueError:
                raise WordParseError(f"bad token {tok!r}") from None
            if x == 0 or not 1 <= abs(x) < n:
                raise WordParseError(f"letter {tok} out of range for n={n}")
            letters.append(x)
    return ArtinWord(n, tuple(letters))


def cmd_nf(word: str, n: int) -> str:
    """Rendered normal form of a braid word."""
    return render(normalize(parse_braid_word(word, n)))


def cmd_rigid_conj(
    word: str, n: int, *, strict_paper: bool = False, scheme: str = "floor"
) -> str:
    """Report of the rigidification attempt: status, rigid conjugate, conjugator."""
    x = normalize(parse_braid_word(word, n))
    patterns = strict_witness_patterns(n) if strict_paper else None
    cert = fast_rigid_conjugate(x, patterns, scheme)
    if cert is None:
        return "I don't know"
    if not cert.verify(x):
        raise AssertionError("certificate failed verification")
    if cert.uniqueness != CERTIFIED and strict_paper:
        return "I don't know"
    lines = [
        f"status: {cert.uniqueness}",
        f"rigid: {render(cert.rigid)}",
        f"conjugator: {render(cert.conjugator)}",
    ]
    if cert.witness_position is not None:
        lines.append(f"witness-position: {cert.witness_position}")
    return "\n".join(lines)


def cmd_conjugacy(word1: str, word2: str, n: int, *, scheme: str = "floor") -> str:
    """Report of the pair solver on two braid words."""
    x1 = normalize(parse_braid_word(word1, n))
    x2 = normalize(parse_braid_word(word2, n))
    answer = solve_conjugacy(x1, x2, scheme=scheme)
    if answer.kind == CONJUGATE:
        return f"conjugate\nconjugator: {render(answer.conjugator)}"
    if answer.kind == NOT_CONJUGATE:
        return "not conjugate"
    return "I don't know"


def _load_witnesses(path: str, n: int) -> tuple[NormalForm, ...]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(normalize(parse_braid_word(line, n)))
    return tuple(out)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_bytes(text.encode())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Garside normal forms, genericity statistics, and fast conjugacy for braid groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("--n", type=int, required=True, help="strand count")

    p_nf = sub.add_parser("nf", help="left normal form of a word")
    add_n(p_nf)
    p_nf.add_argument("word")

    p_rc = sub.add_parser("rigid-conj", help="rigidification with certificate")
    add_n(p_rc)
    p_rc.add_argument("word")
    p_rc.add_argument("--strict-paper", action="store_true")
    p_rc.add_argument("--scheme", choices=("paper", "floor"), default="floor")

    p_cj = sub.add_parser("conjugacy", help="conjugacy of two words")
    add_n(p_cj)
    p_cj.add_argument("word1")
    p_cj.add_argument("word2")
    p_cj.add_argument("--scheme", choices=("paper", "floor"), default="floor")

    p_census = sub.add_parser("census", help="exact sphere/ball counting")
    census_sub = p_census.add_subparsers(dest="census_command", required=True)
    p_count = census_sub.add_parser("count")
    add_n(p_count)
    p_count.add_argument("--length", type=int, required=True)
    p_count.add_argument("--ball", action="store_true", help="count the ball instead of the sphere")
    p_growth = census_sub.add_parser("growth")
    add_n(p_growth)
    p_growth.add_argument("--length", type=int, required=True, help="largest length used")

    p_sample = sub.add_parser("sample", help="uniform random normal forms")
    sample_sub = p_sample.add_subparsers(dest="sample_command", required=True)
    for name in ("sphere", "ball"):
        p_s = sample_sub.add_parser(name)
        add_n(p_s)
        p_s.add_argument("--length", type=int, required=True)
        p_s.add_argument("--samples", type=int, default=1)
        p_s.add_argument("--seed", type=int, default=0)
        if name == "sphere":
            p_s.add_argument("--eps", type=int, default=0)

    p_exp = sub.add_parser("experiment", help="Monte Carlo statistics")
    p_exp.add_argument("kind")
    add_n(p_exp)
    p_exp.add_argument("--lengths", required=True, help="comma-separated ascending lengths")
    p_exp.add_argument("--samples", type=int, default=1000)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--scheme", choices=("paper", "floor"), default="floor")
    p_exp.add_argument("--strict-paper", action="store_true")
    p_exp.add_argument("--witness-file", default=None)
    p_exp.add_argument("--format", choices=("csv", "json"), default="csv")
    p_exp.add_argument("--out", default=None)
    p_exp.add_argument("--timing", action="store_true", help="keep wall-clock timings in the data file")
    p_exp.add_argument("--fit", action="store_true", help="report the decay fit on stderr")

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "nf":
        print(cmd_nf(args.word, args.n))
    elif args.command == "rigid-conj":
        print(
            cmd_rigid_conj(
                args.word, args.n, strict_paper=args.strict_paper, scheme=args.scheme
            )
        )
    elif args.command == "conjugacy":
        print(cmd_conjugacy(args.word1, args.word2, args.n, scheme=args.scheme))
    elif args.command == "census":
        if args.census_command == "count":
            fn = count_ball if args.ball else count_sphere
            print(fn(args.n, args.length))
        else:
            est = growth_rate(args.n, args.length)
            for l, ratio in est.ratios:
                print(f"l={l}: {ratio} ~ {float(ratio):.6f}")
            print(f"estimate: {float(est.estimate):.6f}")
    elif args.command == "sample":
        if args.sample_command == "sphere":
            cfg = SampleConfig(
                n=args.n, l=args.length, eps=args.eps,
                sample_count=args.samples, seed=args.seed,
            )
            for x in sample_spheres(cfg):
                print(render(x))
        else:
            rng = random.Random(args.seed)
            for _ in range(args.samples):
                print(render(sample_ball(args.n, args.length, rng)))
    elif args.command == "experiment":
        if args.kind not in EXPERIMENT_KINDS:
            raise ValueError(f"unknown experiment kind {args.kind!r}")
        l_list = [int(tok) for tok in args.lengths.split(",")]
        witnesses = (
            _load_witnesses(args.witness_file, args.n) if args.witness_file else ()
        )
        if args.kind == "pa-proportion" and not witnesses:
            print(
                "no witness words supplied; reporting the conjugate-to-rigid "
                "proportion, not a pseudo-Anosov statistic",
                file=sys.stderr,
            )
        cfg = SampleConfig(
            n=args.n, l=l_list[0], sample_count=args.samples, seed=args.seed
        )
        patterns = strict_witness_patterns(args.n) if args.strict_paper else None
        rows = run_experiment(
            args.kind,
            cfg,
            l_list,
            scheme=args.scheme,
            strict_paper=args.strict_paper,
            witness_patterns=patterns,
            witnesses=witnesses,
        )
        timing = args.timing or args.kind == "conjugacy-bench"
        if args.format == "csv":
            _emit(rows_to_csv(rows, include_timing=timing), args.out)
        else:
            _emit(rows_to_json(rows, include_timing=timing), args.out)
        if args.fit:
            try:
                fit = fit_decay(rows)
                print(
                    f"decay fit: slope={fit.slope:.6f} intercept={fit.intercept:.6f} r2={fit.r_squared:.4f}",
                    file=sys.stderr,
                )
            except UndefinedFitError as exc:
                print(f"decay fit undefined: {exc}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _dispatch(args)
    except WordParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
