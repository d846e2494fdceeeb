"""Command line front end.

Subcommands:

  generate   sample (F, G) pairs, writing <out>.jsonl, <out>.meta.json and
             <out>.tokens.txt
  verify     re-derive G from F with the completion oracle for every sample
             of a dataset file
  profile    aggregate size/degree/term statistics of a dataset file
  bench      time generation against forward completion per variable count
  tokenize   re-emit the token file of an existing dataset
  fglm       convert a dataset to another term order
  solve      enumerate the varieties of prime-field datasets

All sampling is deterministic given --seed; when the flag is omitted the
GBGEN_SEED environment variable supplies the default (0 if unset).  Exit
status is 0 on success, 1 when verification or solving finds a failure,
2 on bad arguments.
"""

import argparse
import json
import os
import subprocess
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from . import __version__

from .bench import DEFAULT_TIMEOUT, BenchReport, run_bench
from .dataset import (
    GenerationConfig,
    OracleMismatchError,
    generate_sample,
    parse_prefix_tokens,
    profile_dataset,
    read_jsonl,
    sample_from_record,
    sample_to_record,
    to_prefix_tokens,
    write_jsonl,
    write_meta,
    write_tokens,
    BOS,
    EOS,
)
from .field import FieldSpec, RATIONALS, prime_field
from .fglm import fglm
from .groebner import GroebnerTimeout, buchberger
from .orders import order_by_name
from .solve import ShapeError, solve_shape

__all__ = ["main", "build_parser"]


def parse_field(text: str) -> FieldSpec:
    """Accept 'q' (or 'qq'/'rationals') and 'f<p>' / 'gf<p>' / bare primes."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return RATIONALS
    for prefix in ("gf", "f"):
        if t.startswith(prefix) and t[len(prefix) :].isdigit():
            return prime_field(int(t[len(prefix) :]))
    if t.isdigit():
        return prime_field(int(t))
    raise argparse.ArgumentTypeError(f"cannot read field {text!r}; try q, f7, f31 or gf101")


def _default_seed() -> int:
    try:
        return int(os.environ.get("GBGEN_SEED", "0"))
    except ValueError:
        return 0


def _generator_stamp() -> dict:
    """Version record for the meta sidecar; adds the git revision when available."""
    stamp = {"generator": f"gbgen {__version__}"}
    try:
        proc = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            cwd=os.path.dirname(os.path.abspath(__file__)),
            capture_output=True,
            text=True,
            timeout=5,
        )
        if proc.returncode == 0 and proc.stdout.strip():
            stamp["generator_revision"] = proc.stdout.strip()
    except OSError:
        pass
    return stamp


def _add_generation_flags(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--field", type=parse_field, required=True, help="q for rationals, f<p> for GF(p)")
    p.add_argument("--m", type=int, required=True, help="number of samples")
    p.add_argument("--d", type=int, default=5, help="max degree of the univariate member (default 5)")
    p.add_argument("--d-prime", type=int, default=3, help="max total degree of transform entries (default 3)")
    p.add_argument("--s-max", type=int, default=None, help="max system size (default n+2)")
    p.add_argument("--sigma", type=float, default=1.0, help="fill density of the triangular factors (default 1.0)")
    p.add_argument("--order", default="lex", choices=["lex", "grlex", "grevlex"], help="target term order")
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help="master seed (default GBGEN_SEED or 0)")
    p.add_argument("--drop-zeros", action="store_true", help="drop zero rows from F instead of keeping them")
    p.add_argument("--verify-fraction", type=float, default=0.01, help="fraction spot-checked inline (default 0.01)")


def _config_from_args(args) -> GenerationConfig:
    return GenerationConfig(
        field=args.field,
        nvars=args.n,
        num_samples=args.m,
        max_degree=args.d,
        max_entry_degree=args.d_prime,
        s_max=args.s_max,
        density=args.sigma,
        order=args.order,
        seed=args.seed,
        drop_zeros=args.drop_zeros,
        verify_fraction=args.verify_fraction,
    )


def _worker_generate(payload):
    config_dict, index = payload
    config = GenerationConfig.from_dict(config_dict)
    return sample_to_record(generate_sample(config, index), config)


def _sample_stream(config: GenerationConfig, jobs: int):
    if jobs <= 1:
        for i in range(config.num_samples):
            yield generate_sample(config, i)
        return
    payloads = [(config.to_dict(), i) for i in range(config.num_samples)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for record in pool.map(_worker_generate, payloads, chunksize=32):
            yield sample_from_record(record)


def cmd_generate(args) -> int:
    config = _config_from_args(args)
    out = args.out
    jsonl_path = f"{out}.jsonl"
    samples = []
    try:
        count = write_jsonl(_collecting(_sample_stream(config, args.jobs), samples), jsonl_path, config)
    except OracleMismatchError as exc:
        print(f"generation aborted: {exc}", file=sys.stderr)
        return 1
    write_meta(f"{out}.meta.json", config, extra=_generator_stamp())
    write_tokens(samples, f"{out}.tokens.txt")
    print(f"wrote {count} samples to {jsonl_path}")
    return 0


def _collecting(stream, into: list):
    for pair in stream:
        into.append(pair)
        yield pair


def _worker_verify(record):
    pair = sample_from_record(record)
    return record["index"], _pair_matches(pair)


def _pair_matches(pair, timeout: float | None = None) -> bool:
    gens = [f for f in pair.F if f]
    if not gens:
        return False
    try:
        recovered = buchberger(gens, timeout=timeout, chain_criterion=True).basis
    except GroebnerTimeout:
        return False
    ring = recovered[0].ring
    expected = sorted(pair.G, key=lambda g: ring.order.key(g.leading_monomial))
    return recovered == expected


def cmd_verify(args) -> int:
    failures = 0
    total = 0
    if args.jobs > 1:
        with open(args.input, "r", encoding="utf-8") as fh:
            records = [json.loads(line) for line in fh if line.strip()]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for index, ok in pool.map(_worker_verify, records, chunksize=8):
                total += 1
                if not ok:
                    failures += 1
                    print(f"FAIL sample {index}: completion of F does not give G")
    else:
        for pair in read_jsonl(args.input):
            total += 1
            if not _pair_matches(pair, timeout=args.timeout):
                failures += 1
                print(f"FAIL sample {pair.index}: completion of F does not give G")
    print(f"verified {total} samples: {total - failures} ok, {failures} failed")
    return 1 if failures else 0


def cmd_profile(args) -> int:
    profile = profile_dataset(read_jsonl(args.input), check_groebner=not args.no_groebner)
    if args.format == "json":
        print(json.dumps(profile.to_dict(), indent=2))
    else:
        print(profile.format_table())
    return 0


def cmd_bench(args) -> int:
    reports = []
    for n in args.n:
        config = GenerationConfig(
            field=args.field,
            nvars=n,
            num_samples=args.m,
            s_max=args.s_max,
            density=args.sigma,
            seed=args.seed,
        )
        reports.append(run_bench(config, timeout=args.timeout))
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        print(BenchReport.table_header())
        for r in reports:
            print(r.table_row())
    return 0


def cmd_tokenize(args) -> int:
    count = 0
    with open(args.out, "w", encoding="utf-8") as fh:
        for pair in read_jsonl(args.input):
            ring = (pair.G or pair.F)[0].ring
            left = to_prefix_tokens(pair.F)
            right = to_prefix_tokens(pair.G)
            # cheap paranoia: the token stream must parse back to the input
            if parse_prefix_tokens(left, ring) != pair.F or parse_prefix_tokens(right, ring) != pair.G:
                print(f"FAIL sample {pair.index}: tokens do not round-trip", file=sys.stderr)
                return 1
            fh.write(" ".join([BOS, *left, EOS]) + "\t" + " ".join([BOS, *right, EOS]) + "\n")
            count += 1
    print(f"tokenized {count} samples into {args.out}")
    return 0


def cmd_fglm(args) -> int:
    converted = []
    for pair in read_jsonl(args.input):
        ring = pair.G[0].ring
        if ring.order.name() != args.src_order:
            print(f"sample {pair.index} is under {ring.order.name()}, not {args.src_order}", file=sys.stderr)
            return 1
        target = order_by_name(args.to_order, ring.nvars)
        pair.G = fglm(pair.G, target)
        pair.F = [f.resorted(target) for f in pair.F]
        converted.append(pair)
    # write with the target order stamped into each record
    with open(args.out, "w", encoding="utf-8") as fh:
        for pair in converted:
            record = {
                "index": pair.index,
                "field": pair.G[0].ring.field.to_dict(),
                "nvars": pair.G[0].ring.nvars,
                "order": args.to_order,
                "s": pair.s,
                "seed": pair.seed_used,
                "F": [str(f) for f in pair.F],
                "G": [str(g) for g in pair.G],
                "contains_zero": pair.contains_zero,
                "over_range": pair.over_range,
            }
            fh.write(json.dumps(record) + "\n")
    print(f"converted {len(converted)} samples to {args.to_order} in {args.out}")
    return 0


def cmd_solve(args) -> int:
    failures = 0
    total = 0
    for pair in read_jsonl(args.input):
        total += 1
        try:
            solutions = solve_shape(pair.G)
        except (ShapeError, ValueError) as exc:
            print(f"sample {pair.index}: cannot solve ({exc})")
            failures += 1
            continue
        bad = 0
        for point in solutions.points:
            values = [c.value for c in point]
            if any(f and f.evaluate(values) for f in pair.F):
                bad += 1
        rendered = ["(" + ", ".join(str(c) for c in point) + ")" for point in solutions.points]
        verdict = "ok" if bad == 0 else f"{bad} points fail F"
        print(f"sample {pair.index}: {len(solutions.points)} solutions {rendered} [{verdict}]")
        if bad:
            failures += 1
    print(f"solved {total} samples, {failures} failures")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbgen", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample (F, G) pairs into dataset files")
    _add_generation_flags(p)
    p.add_argument("--out", required=True, help="output path prefix")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("verify", help="run the completion oracle over a dataset")
    p.add_argument("--input", required=True, help="dataset .jsonl path")
    p.add_argument("--timeout", type=float, default=None, help="per-sample seconds (default none)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("profile", help="dataset statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--no-groebner", action="store_true", help="skip the reducedness ratio (faster)")
    p.set_defaults(fn=cmd_profile)

    p = sub.add_parser("bench", help="time backward generation against forward completion")
    p.add_argument("--n", type=lambda s: [int(x) for x in s.split(",")], required=True,
                   help="variable counts, comma separated (e.g. 2,3,4,5)")
    p.add_argument("--field", type=parse_field, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s-max", type=int, default=None)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("tokenize", help="emit the prefix-token file of a dataset")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_tokenize)

    p = sub.add_parser("fglm", help="convert a dataset to another term order")
    p.add_argument("--input", required=True)
    p.add_argument("--from", dest="src_order", default="lex", choices=["lex", "grlex", "grevlex"])
    p.add_argument("--to", dest="to_order", required=True, choices=["lex", "grlex", "grevlex"])
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_fglm)

    p = sub.add_parser("solve", help="enumerate varieties of a prime-field dataset")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=cmd_solve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
