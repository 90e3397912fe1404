"""Command-line surface: construct states, run suites, export deterministic JSON.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error, 3 resource bound exceeded.  All output is UTF-8 and byte-stable for
identical invocations (the verify report alone carries a wall-time field).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import irreps
from .cache import ENV_CACHE_DIR, CatalogCache, cache_key
from .errors import DomainError, ResourceLimitError
from .scalars import rational_str
from .su2 import su2_irrep_state
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit(text: str, out_path=None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
        sys.stdout.flush()


def _index_list(raw: str | None) -> tuple[int, ...]:
    if raw is None or raw.strip() == "":
        return ()
    try:
        return tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise DomainError(f"not a comma-separated index list: {raw!r}") from None


def _state_text(state: irreps.IrrepState) -> str:
    header = (
        f"({state.request.n},{state.request.m}) "
        f"upper={','.join(map(str, state.request.upper)) or '-'} "
        f"lower={','.join(map(str, state.request.lower)) or '-'} "
        f"method={state.method}"
    )
    rows = [
        (rational_str(coeff), str(mono))
        for mono, coeff in state.vector.sorted_terms()
    ]
    width = max((len(c) for c, _ in rows), default=1)
    lines = [header] + [f"  {c:>{width}}  {m}" for c, m in rows]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3schwinger",
        description="Exact construction and verification of SU(3) irrep states "
        "in the two-triplet boson Fock space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_irrep = sub.add_parser("irrep", help="construct one (n,m) irrep state")
    p_irrep.add_argument("--n", type=int, required=True)
    p_irrep.add_argument("--m", type=int, required=True)
    p_irrep.add_argument("--upper", default=None, help="comma-separated upper indices")
    p_irrep.add_argument("--lower", default=None, help="comma-separated lower indices")
    p_irrep.add_argument("--method", choices=irreps.METHODS, default="isb")
    p_irrep.add_argument("--format", choices=("json", "text"), default="json")
    p_irrep.add_argument("--max-total", type=int, default=irreps.DEFAULT_LIMIT)
    p_irrep.add_argument("--cache", default=None, help="cache directory "
                         f"(default ${ENV_CACHE_DIR} if set)")
    p_irrep.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True,
                          choices=tuple(SUITES) + ("all",))
    p_verify.add_argument("--max-total", type=int, default=irreps.DEFAULT_LIMIT)
    p_verify.add_argument("--out", default=None)

    p_dim = sub.add_parser("dim", help="exact Gram rank vs the dimension formula")
    p_dim.add_argument("--n", type=int, required=True)
    p_dim.add_argument("--m", type=int, required=True)
    p_dim.add_argument("--max-total", type=int, default=irreps.DEFAULT_LIMIT)
    p_dim.add_argument("--out", default=None)

    p_tower = sub.add_parser("tower", help="k+^rho ladder over an irrep state")
    p_tower.add_argument("--n", type=int, required=True)
    p_tower.add_argument("--m", type=int, required=True)
    p_tower.add_argument("--rho", type=int, required=True)
    p_tower.add_argument("--upper", default=None, help="defaults to all 1s")
    p_tower.add_argument("--lower", default=None, help="defaults to all 1s")
    p_tower.add_argument("--max-total", type=int, default=irreps.DEFAULT_LIMIT)
    p_tower.add_argument("--out", default=None)

    p_su2 = sub.add_parser("su2-irrep", help="doublet-sector irrep state")
    p_su2.add_argument("--indices", default="", help="comma-separated 1/2 list")
    p_su2.add_argument("--out", default=None)

    return parser


def _cmd_irrep(args) -> int:
    req = irreps.IrrepRequest(
        args.n, args.m, _index_list(args.upper), _index_list(args.lower)
    )
    if req.n + req.m > args.max_total:
        raise ResourceLimitError(
            f"n+m = {req.n + req.m} exceeds --max-total {args.max_total}"
        )
    cache_dir = args.cache or os.environ.get(ENV_CACHE_DIR)
    key = None
    cache = None
    if cache_dir:
        cache = CatalogCache(cache_dir)
        key = cache_key(
            {
                "format_version": irreps.STATE_FORMAT_VERSION,
                "n": req.n,
                "m": req.m,
                "upper": list(req.upper),
                "lower": list(req.lower),
                "method": args.method,
                "output": args.format,
            }
        )
        body = cache.get(key)
        if body is not None:
            _emit(body, args.out)
            return EXIT_OK
    state = irreps.construct(req, args.method)
    body = _dumps(state.to_json_dict()) if args.format == "json" else _state_text(state)
    if cache is not None:
        cache.put(key, body)
    _emit(body, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_total)
    _emit(_dumps(report.to_json_dict()), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_dim(args) -> int:
    rank = irreps.gram_rank(args.n, args.m, limit=args.max_total)
    expected = irreps.dim_formula(args.n, args.m)
    _emit(
        _dumps(
            {
                "n": args.n,
                "m": args.m,
                "gram_rank": rank,
                "formula": expected,
                "match": rank == expected,
            }
        ),
        args.out,
    )
    return EXIT_OK


def _cmd_tower(args) -> int:
    upper = _index_list(args.upper) if args.upper is not None else (1,) * args.n
    lower = _index_list(args.lower) if args.lower is not None else (1,) * args.m
    req = irreps.IrrepRequest(args.n, args.m, upper, lower)
    if req.n + req.m + 2 * args.rho > 2 * args.max_total:
        raise ResourceLimitError(
            f"tower occupation {req.n + req.m + 2 * args.rho} exceeds "
            f"2*max-total = {2 * args.max_total}"
        )
    vector = irreps.tower_state(req, args.rho)
    k_weight, m_weight = irreps.sp2r_weight(vector)
    _emit(
        _dumps(
            {
                "label": [req.n, req.m],
                "upper": list(req.upper),
                "lower": list(req.lower),
                "rho": args.rho,
                "k": rational_str(k_weight),
                "m_prime": rational_str(m_weight),
                "terms": vector.to_terms_json(),
            }
        ),
        args.out,
    )
    return EXIT_OK


def _cmd_su2(args) -> int:
    state = su2_irrep_state(_index_list(args.indices))
    _emit(_dumps(state.to_json_dict()), args.out)
    return EXIT_OK


_COMMANDS = {
    "irrep": _cmd_irrep,
    "verify": _cmd_verify,
    "dim": _cmd_dim,
    "tower": _cmd_tower,
    "su2-irrep": _cmd_su2,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
