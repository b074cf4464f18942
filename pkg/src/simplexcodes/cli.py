"""Command-line front end.

Exit status: 0 all checks pass, 1 a verification failed, 2 usage or config
error, 3 a construction failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from collections.abc import Sequence

import numpy as np

from .codes import (
    SPACES,
    SimplexCode,
    assemble_from_witness,
    check_kl,
    construction_gmde,
    map_space,
)
from .combinat import enumerate_simplex
from .l1codes import (
    ConstructionError,
    L1Code,
    bose_chowla,
    certify,
    coset_codes,
    scaled_simplex_code,
)
from .tverberg import NoWitnessFound, find_witness, kl_point_cloud, radon_witness_k2

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONSTRUCTION = 0, 1, 2, 3

GATES = {
    "identity": lambda q: np.eye(q),
    "x": lambda q: np.eye(q)[::-1],
    "t": lambda q: np.diag([1] + [np.exp(1j * np.pi / 4)] * (q - 1)),
}
CHECKS = ("kl", "oracle-deletion", "oracle-ad", "oracle-spin", "fidelity", "covariance")


class UsageError(Exception):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def emit(text: str, path: str | None) -> None:
    """Write to stdout, or atomically (temp file then rename) to ``path``."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_code(path: str) -> SimplexCode:
    try:
        return SimplexCode.from_json(_read_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"{path} is not a valid code file: {exc}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    if args.kind == "family":
        code = construction_gmde(args.g, args.m, args.delta, args.eps, args.space)
        emit(code.dumps(), args.output)
        return EXIT_OK
    if args.kind == "scaled":
        emit(canonical_json(scaled_simplex_code(args.K, args.t).to_json()), args.output)
        return EXIT_OK
    if args.kind == "sidon":
        sidon = bose_chowla(args.p, args.t)
        emit(canonical_json(coset_codes(sidon, args.q, args.N).to_json()), args.output)
        return EXIT_OK
    # tverberg
    if args.l1 and args.scaled:
        raise UsageError("give either --l1 or --scaled, not both")
    if args.l1:
        try:
            l1 = L1Code.from_json(_read_json(args.l1))
        except (KeyError, ValueError, TypeError) as exc:
            raise UsageError(f"{args.l1} is not a valid l1 code file: {exc}") from None
        source = os.path.basename(args.l1)
    elif args.scaled:
        l1 = scaled_simplex_code(args.K, args.t)
        source = f"scaled(K={args.K},t={args.t})"
    else:
        raise UsageError("tverberg needs --l1 FILE or --scaled")
    if len(l1) >= 2:
        l1 = certify(l1)
    cloud = kl_point_cloud(l1, args.t)
    if args.strategy == "radon":
        if args.K != 2:
            raise UsageError("the radon strategy needs --K 2")
        witness = radon_witness_k2(cloud)
    else:
        hint = None
        if args.strategy == "hinted":
            if not args.hint:
                raise UsageError("--strategy hinted needs --hint FILE")
            hint = _read_json(args.hint)
            hint = hint["blocks"] if isinstance(hint, dict) else hint
        witness = find_witness(cloud, args.K, args.strategy, hint)
    seed = {
        "stage": "l1",
        "source": source,
        "q": l1.q,
        "N": l1.N,
        "size": len(l1),
        "distance": l1.certified_distance,
        "strategy": args.strategy,
    }
    code = assemble_from_witness(witness, cloud, args.space, upstream=[seed])
    emit(code.dumps(), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _gate_matrix(source: str, q: int) -> tuple[str, np.ndarray]:
    if source in GATES:
        return source, GATES[source](q)
    data = _read_json(source)
    try:
        m = np.array([[complex(re, im) for re, im in row] for row in data], dtype=complex)
    except (TypeError, ValueError):
        raise UsageError(f"{source}: gate file must be rows of [re, im] pairs") from None
    if m.shape != (q, q):
        raise UsageError(f"{source}: gate must be {q}x{q}")
    return os.path.basename(source), m


def _verify_one(check: str, code: SimplexCode, args) -> dict:
    from . import oracle

    t = args.t
    if check == "kl":
        report = check_kl(code, t, args.mode, args.tolerance)
        return report.to_json()
    if check == "oracle-deletion":
        if code.space != "pi":
            raise UsageError("oracle-deletion needs a pi code")
        residual = 0.0
        for vec in code.amplitudes:
            for n in vec:
                for e in enumerate_simplex(code.q, t):
                    residual = max(residual, oracle.deletion_oracle_check(n, e))
        gram = oracle.pi_deletion_gram(code, t, args.oracle_tolerance)
        out = gram.to_json()
        out["closed_form_residual"] = residual
        out["passed"] = gram.passed and residual <= 1e-12
        return out
    if check == "oracle-ad":
        if code.space != "fock":
            raise UsageError("oracle-ad needs a fock code")
        return oracle.ad_kl_gram(code, t, _floats(args.gammas), args.oracle_tolerance).to_json()
    if check == "oracle-spin":
        if code.space != "spin":
            raise UsageError("oracle-spin needs a spin code (use map --to spin)")
        return oracle.spin_kl_check(code, t, args.oracle_tolerance).to_json()
    if check == "fidelity":
        if code.space != "fock":
            raise UsageError("fidelity needs a fock code")
        gammas = _floats(args.fit_gammas)
        fit = oracle.fidelity_series(code, t, gammas, seed=args.seed)
        out = fit.to_json()
        out["passed"] = fit.relative_error <= 0.01
        return out
    if check == "covariance":
        if not args.gate:
            raise UsageError("covariance needs at least one --gate")
        gates, logicals, passed = {}, [], True
        for source in args.gate:
            label, g = _gate_matrix(source, code.q)
            res = oracle.covariance_check(code, g, args.oracle_tolerance)
            gates[label] = res.to_json()
            passed = passed and res.invariant and res.unitarity_defect <= args.oracle_tolerance
            logicals.append(res.logical)
        out = {"gates": gates, "passed": passed}
        if passed:
            out["projective_group_order"] = oracle.projective_group_order(
                logicals, args.oracle_tolerance
            )
        return out
    raise UsageError(f"unknown check {check!r}")


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {list(CHECKS)}")
    if args.t is None:
        if code.distance is None:
            raise UsageError("code has no declared distance; pass --t")
        args.t = code.distance - 1
    if not 0 <= args.t <= code.N:
        raise UsageError(f"--t must lie in [0, {code.N}]")
    results = {c: _verify_one(c, code, args) for c in checks}
    passed = all(r["passed"] for r in results.values())
    report = {
        "config": {
            "code": os.path.basename(args.code),
            "checks": checks,
            "t": args.t,
            "mode": args.mode,
            "tolerance": args.tolerance,
            "oracle_tolerance": args.oracle_tolerance,
            "gammas": _floats(args.gammas),
            "fit_gammas": _floats(args.fit_gammas),
            "seed": args.seed,
            "gate": args.gate or [],
        },
        "passed": passed,
        "results": results,
    }
    emit(canonical_json(report), args.output)
    if not passed:
        for name, r in results.items():
            if not r["passed"]:
                witness = _first_witness(r)
                print(f"FAIL {name}: witness {json.dumps(witness)}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


def _first_witness(result: dict):
    if "conditions" in result:
        for name, c in result["conditions"].items():
            if not c["passed"]:
                return {"condition": name, **c["witness"]}
    return result.get("witness")


# ---------------------------------------------------------------------------
# map, examples, simplex


def cmd_map(args) -> int:
    code = _load_code(args.code)
    mapped = map_space(code, args.to)
    if code.distance is not None and mapped.distance is None:
        print(
            f"warning: distance cleared mapping {code.space} -> {args.to} at q={code.q}; "
            "re-run verify to re-derive it",
            file=sys.stderr,
        )
    emit(mapped.dumps(), args.output)
    return EXIT_OK


def cmd_examples(args) -> int:
    from .examples import example_names, run_all, run_example

    if args.all == bool(args.name):
        raise UsageError("give exactly one of --all or an example name")
    if args.name and args.name not in example_names():
        raise UsageError(f"unknown example {args.name!r}; choose from {example_names()}")
    results = run_all() if args.all else [run_example(args.name)]
    if args.json:
        emit(canonical_json([r.to_json() for r in results]), args.output)
    else:
        lines = [f"{'example':<22}{'status':<9}{'seconds':>8}  detail"]
        for r in results:
            lines.append(f"{r.name:<22}{r.status:<9}{r.seconds:>8.3f}  {r.detail}")
        if not args.all:
            for i, p, a in results[0].amplitudes:
                lines.append(f"  c{i}  {p}  {a}")
        emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_simplex(args) -> int:
    if args.q < 1 or args.N < 0:
        raise UsageError("need --q >= 1 and --N >= 0")
    pts = enumerate_simplex(args.q, args.N)
    emit(canonical_json({"q": args.q, "N": args.N, "size": len(pts), "points": [list(p) for p in pts]}), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplexcodes", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def out(p):
        p.add_argument("--output", default=None, help="output file (default stdout)")

    con = sub.add_parser("construct", help="build an l1 code or a quantum code")
    csub = con.add_subparsers(dest="kind", required=True)
    fam = csub.add_parser("family", help="two-mode (g, m, delta, eps) family")
    fam.add_argument("--g", type=int, required=True)
    fam.add_argument("--m", type=int, required=True)
    fam.add_argument("--delta", type=int, required=True)
    fam.add_argument("--eps", type=int, choices=(-1, 1), required=True)
    fam.add_argument("--space", choices=SPACES, default="fock")
    out(fam)
    sc = csub.add_parser("scaled", help="scaled-simplex l1 code")
    sc.add_argument("--K", type=int, required=True)
    sc.add_argument("--t", type=int, required=True)
    out(sc)
    si = csub.add_parser("sidon", help="largest Sidon coset l1 code")
    si.add_argument("--p", type=int, required=True)
    si.add_argument("--t", type=int, required=True)
    si.add_argument("--q", type=int, required=True)
    si.add_argument("--N", type=int, required=True)
    out(si)
    tv = csub.add_parser("tverberg", help="quantum code from an l1 code via a Tverberg partition")
    tv.add_argument("--K", type=int, required=True)
    tv.add_argument("--t", type=int, required=True)
    tv.add_argument("--l1", help="l1 code JSON file")
    tv.add_argument("--scaled", action="store_true", help="use the scaled-simplex code for K, t")
    tv.add_argument(
        "--strategy", choices=("orbit", "exhaustive", "hinted", "radon"), default="orbit"
    )
    tv.add_argument("--hint", help="JSON partition: list of blocks of points")
    tv.add_argument("--space", choices=SPACES, default="pi")
    out(tv)

    ver = sub.add_parser("verify", help="run exact and oracle checks on a code file")
    ver.add_argument("code")
    ver.add_argument("--checks", default="kl", help=f"comma list from {','.join(CHECKS)}")
    ver.add_argument("--t", type=int, default=None, help="default: declared distance - 1")
    ver.add_argument("--mode", choices=("exact", "float"), default="exact")
    ver.add_argument("--tolerance", type=float, default=1e-12, help="float-mode KL tolerance")
    ver.add_argument("--oracle-tolerance", type=float, default=1e-9)
    ver.add_argument("--gammas", default="0.01,0.1,0.3", help="gamma samples for oracle-ad")
    ver.add_argument("--fit-gammas", default="0.001,0.002,0.004", help="gammas for fidelity")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument(
        "--gate", action="append", help="identity, x, t, or a JSON matrix file; repeatable"
    )
    out(ver)

    mp = sub.add_parser("map", help="retag a code in another space")
    mp.add_argument("code")
    mp.add_argument("--to", choices=SPACES, required=True)
    out(mp)

    ex = sub.add_parser("examples", help="rebuild and compare the published examples")
    ex.add_argument("name", nargs="?")
    ex.add_argument("--all", action="store_true")
    ex.add_argument("--json", action="store_true", help="JSON instead of a table")
    out(ex)

    sx = sub.add_parser("simplex", help="enumerate S_{q,N}")
    sx.add_argument("--q", type=int, required=True)
    sx.add_argument("--N", type=int, required=True)
    out(sx)
    return parser


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "map": cmd_map,
    "examples": cmd_examples,
    "simplex": cmd_simplex,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionError, NoWitnessFound) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except ValueError as exc:
        # parameter validation inside the library
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

