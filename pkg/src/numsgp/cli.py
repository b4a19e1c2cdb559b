"""Command-line interface: ``numsgp <subcommand> ...``.

Exit status: 0 on success, 2 when an input violates a precondition, 3 when a
verifier reports FAIL, 1 on any other error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import lemmas, rf, shifted, structure, toric
from .errors import EnumerationOverflow, NoCanonicalForm, PatternNotFound, PrecondFailed
from .report import FAIL, Report, not_applicable
from .semigroup import NumericalSemigroup

EXIT_OK, EXIT_INTERNAL, EXIT_PRECOND, EXIT_FAIL = 0, 1, 2, 3
SAFE_INT = 2**53


# -- serialization -----------------------------------------------------------------


def jsonable(obj):
    """Plain JSON values; integers beyond 2^53 become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "as_dict"):
        return jsonable(obj.as_dict())
    if isinstance(obj, float):
        raise TypeError("floating point values are not part of the output schema")
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, Report):
        return pad + str(obj).replace("\n", "\n" + pad)
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, Report)) or (isinstance(v, list) and v and
                                                  isinstance(v[0], (dict, Report))):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_short(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        parts = []
        for v in obj:
            body = _text(v, indent + 1)
            if isinstance(v, dict):
                body = pad + "- " + body[len(pad) + 2:]
            parts.append(body)
        return "\n".join(parts)
    return pad + _short(obj)


def _short(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_short(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}={_short(x)}" for k, x in v.items()) + "}"
    return str(v)


def emit(payload, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(dumps(payload) + "\n")
    else:
        out.write(_text(payload) + "\n")


def _reports(payload):
    if isinstance(payload, Report):
        yield payload
    elif isinstance(payload, dict):
        for v in payload.values():
            yield from _reports(v)
    elif isinstance(payload, list):
        for v in payload:
            yield from _reports(v)


# -- subcommands ---------------------------------------------------------------------


def _H(args):
    return NumericalSemigroup.new(args.generators)


def _header(H):
    out = {"generators": list(H.generators)}
    if H.redundant:
        out["dropped"] = list(H.redundant)
    return out


def cmd_analyze(args):
    H = _H(args)
    out = _header(H)
    out.update(H.pf_data.as_dict())
    out["e"] = H.e
    out["N"] = H.N
    if H.e >= 2:
        al = H.alphas
        out["alphas"] = list(al.alpha)
        out["alpha_witnesses"] = [list(w) for w in al.witnesses]
    out["apery"] = list(H.apery(H.generators[0]).elements)
    return out


def cmd_rf(args):
    H = _H(args)
    fs = [args.f] if args.f is not None else list(H.pf)
    out = _header(H)
    out["pf"] = list(H.pf)
    blocks = []
    for f in fs:
        block = {"f": f}
        try:
            mats = rf.rf_matrices(H, f, args.cap)
        except EnumerationOverflow as exc:
            block["overflow"] = {"message": str(exc), "row_counts": exc.counts}
            blocks.append(block)
            continue
        block["count"] = len(mats)
        block["matrices"] = [M.as_lists() for M in mats[: args.limit]]
        block["special_rows"] = [[s.as_dict() for s in rf.special_rows(H, M)]
                                 for M in mats[: args.limit]]
        block["relations"] = [b.as_dict() for b in rf.rf_relations(H, f, mats)]
        if f in H.pf_prime:
            block["positive_columns"] = rf.verify_positive_columns(H, f, args.cap)
        blocks.append(block)
    out["rf"] = blocks
    pairs = sorted({(f, g) for f in H.pf for g in H.pf if f <= g and not H.contains(f + g)})
    out["pairwise_zero"] = [rf.verify_pairwise_zero(H, f, g) for f, g in pairs]
    return out


def cmd_ideal(args):
    H = _H(args)
    out = _header(H)
    gens = toric.minimal_generators(H)
    out["mu"] = len(gens)
    out["minimal_generators"] = [b.as_dict() for b in gens]
    if H.e == 4:
        n1, n2, n3, n4 = H.generators
        out["relation_n1_n4_eq_n2_n3"] = n1 + n4 == n2 + n3
    if H.e <= 6:
        out["betti"] = toric.graded_betti(H).as_dict()
        out["betti_identities"] = toric.betti_summary(H)
    if H.e == 4 and H.is_almost_symmetric:
        out["comparison"] = toric.verify_comparison(H)
        out["generator_count"] = structure.verify_seven_gen(H)
    if H.e in (3, 4):
        out["rf_generation"] = structure.verify_rf_generation(H)
    return out


def cmd_komeda(args):
    H = _H(args)
    out = _header(H)
    out["form"] = structure.komeda_form(H).as_dict()
    out["structure"] = structure.verify_type2_structure(H)
    return out


def verify_one(gens):
    """Every applicable check on one semigroup, as a list of reports."""
    H = NumericalSemigroup.new(gens)
    reps = lemmas.run_all(H)
    if H.e == 4:
        reps.append(structure.verify_type_bound(H))
        if H.is_almost_symmetric:
            reps.append(structure.verify_seven_gen(H))
            if H.type >= 2:
                reps.append(toric.verify_comparison(H))
        if H.classification == "pseudo-symmetric":
            reps.append(structure.verify_type2_structure(H))
        if H.is_almost_symmetric and H.frobenius % 2:
            try:
                reps.append(structure.analyze_cyclic_rf(H))
            except PatternNotFound as exc:
                reps.append(not_applicable("cyclic-rf", str(exc)))
    if H.e in (3, 4):
        reps.append(structure.verify_rf_generation(H))
    return {"generators": list(H.generators), "reports": reps}


def _verify_safe(gens):
    try:
        return verify_one(gens)
    except PrecondFailed as exc:
        return {"generators": list(gens), "error": str(exc)}


def read_corpus(path):
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if line:
            out.append([int(x) for x in line.split()])
    return out


def cmd_verify(args):
    if args.corpus:
        corpus = read_corpus(args.corpus)
        workers = shifted.worker_count()
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                results = list(pool.map(_verify_safe, corpus))
        else:
            results = [_verify_safe(g) for g in corpus]
        failed = [r["generators"] for r in results
                  if any(rep.failed for rep in r.get("reports", []))]
        return {"corpus": args.corpus, "count": len(results), "failed": failed,
                "results": results if args.full else
                [r for r in results if r["generators"] in failed or "error" in r]}
    if not args.generators:
        raise PrecondFailed("give generators or --corpus FILE")
    return verify_one(args.generators)


def cmd_scan(args):
    H = _H(args)
    m_max = args.m_max if args.m_max is not None else shifted.default_m_max(H)
    m_from = args.from_m
    if args.out and m_from is None and Path(args.out).exists():
        # resume after the last complete record
        last = None
        for line in Path(args.out).read_text().splitlines():
            if line.strip():
                last = json.loads(line)["m"]
        m_from = 0 if last is None else int(last) + 1
    m_from = m_from or 0
    recs = shifted.scan(H, m_max, m_from) if m_from <= m_max else []
    if args.out:
        with open(args.out, "a") as fh:
            for r in recs:
                fh.write(dumps(r) + "\n")
    out = _header(H)
    inv = shifted.invariants(H)
    out.update(s=inv.s, d=inv.d, s_prime=inv.s_prime, m_from=m_from, m_max=m_max,
               scanned=len(recs), as_type3=shifted.as_type3_shifts(recs),
               type2=[r.m for r in recs if r.valid and r.minimal and r.as_type2],
               invalid=[r.m for r in recs if not r.valid],
               non_minimal=[r.m for r in recs if r.valid and not r.minimal])
    if args.out:
        out["out"] = args.out
    elif args.records:
        out["records"] = recs
    return out


def cmd_family(args):
    p = shifted.FamilyParams(args.a, args.b, args.d).validate()
    H = shifted.construct_family(p)
    out = {"params": {"a": p.a, "b": p.b, "d": p.d}, "generators": list(H.generators)}
    out["verify"] = shifted.verify_family(p, args.steps)
    return out


def cmd_search_odd(args):
    return shifted.odd_generator_search(args.bound)


# -- parser ----------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="numsgp", description="Numerical semigroup toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def gens_cmd(name, fn, help_, optional=False):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("generators", type=int, nargs="*" if optional else "+")
        s.set_defaults(func=fn)
        return s

    gens_cmd("analyze", cmd_analyze, "Frobenius number, PF(H), type, alphas")
    s = gens_cmd("rf", cmd_rf, "RF-matrices, relations, special rows")
    s.add_argument("--f", type=int, help="one pseudo-Frobenius number (default: all)")
    s.add_argument("--cap", type=int, default=rf.DEFAULT_MATRIX_CAP)
    s.add_argument("--limit", type=int, default=20, help="matrices to print per f")
    gens_cmd("ideal", cmd_ideal, "minimal generators of I_H and Betti numbers")
    gens_cmd("komeda", cmd_komeda, "canonical form of a pseudo-symmetric 4-generated H")
    s = gens_cmd("verify", cmd_verify, "run every applicable check", optional=True)
    s.add_argument("--corpus", help="file with one generator list per line")
    s.add_argument("--full", action="store_true", help="include passing corpus entries")
    s = gens_cmd("scan", cmd_scan, "classify H + m over a range of m")
    s.add_argument("--m-max", type=int)
    s.add_argument("--from-m", type=int)
    s.add_argument("--out", help="append JSON-lines records here (resumable)")
    s.add_argument("--records", action="store_true", help="include records in the output")
    s = sub.add_parser("family", parents=[common], help="construct and verify H(a,b;d)")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--steps", type=int, default=5)
    s.set_defaults(func=cmd_family)
    s = sub.add_parser("search-odd", parents=[common], help="all-odd almost symmetric type 3")
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(func=cmd_search_odd)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except (PrecondFailed, EnumerationOverflow) as exc:
        _error(args, exc, "precondition")
        return EXIT_PRECOND
    except NoCanonicalForm as exc:
        _error(args, exc, "theorem-check")
        return EXIT_FAIL
    except Exception as exc:  # noqa: BLE001
        _error(args, exc, "internal")
        return EXIT_INTERNAL
    emit(payload, args.format)
    if any(r.verdict == FAIL for r in _reports(payload)):
        return EXIT_FAIL
    if isinstance(payload, dict) and payload.get("failed"):
        return EXIT_FAIL
    return EXIT_OK


def _error(args, exc, kind):
    msg = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
    if args.format == "json":
        sys.stdout.write(dumps(msg) + "\n")
    print(f"numsgp: {type(exc).__name__}: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
