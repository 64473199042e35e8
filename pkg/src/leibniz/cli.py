"""Command-line front end.  Exit codes: 0 ok, 1 violation, 2 usage or validation error."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as cat
from .algebra import LeibnizAlgebra, NotLeibnizError, StructureError
from .cideals import is_c_ideal, is_weak_c_ideal
from .corpus import GOLDEN_COUNTS, BudgetExceeded, enumerate_corpus
from .field import FieldError, QQ
from .fileformat import AlgebraFile, FileFormatError, dump, dump_many, load_one, parse_field
from .harness import SUITES, ApplicabilityError, applicable, corpus_from_spec, run_suite
from .ideals import asoc_result, cartan_subalgebras, core, frattini, is_subideal
from .structure import is_supersolvable, profile, turner_form
from .subspace import Subspace
from .verdict import Undecided, Verdict

OK, VIOLATION, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field_arg(text: str):
    t = text.strip()
    if t.isdigit():
        t = f"GF{t}"
    return parse_field([t])


def _load(path: str, allow_nonleibniz: bool) -> tuple[AlgebraFile, LeibnizAlgebra]:
    af = load_one(path)
    return af, af.to_algebra(verify=not allow_nonleibniz)


def _subspace(L: LeibnizAlgebra, spec: str | None) -> Subspace:
    """'x' / 'a b' style label lists or '1 0 0 ; 0 1/2 1' coordinate rows, ';'-separated."""
    if spec is None:
        raise UsageError("this predicate needs --sub")
    vecs = []
    for part in spec.split(";"):
        toks = part.replace(",", " ").split()
        if not toks:
            continue
        if all(t in L.labels for t in toks) and not (len(toks) == L.dim and all(t[0].isdigit() or t[0] == "-" for t in toks)):
            vecs += [L.basis_vector(t) for t in toks]
        elif len(toks) == L.dim:
            vecs.append(tuple(L.field.parse(t) for t in toks))
        else:
            raise UsageError(f"cannot read vector {part.strip()!r}")
    return L.span(vecs)


def _render(x, F):
    if isinstance(x, Subspace):
        return x.render()
    if isinstance(x, Verdict):
        return {"outcome": x.outcome.value, "method": x.method, "note": x.note, "witness": _render(x.witness, F)}
    if hasattr(x, "to_dict"):
        return x.to_dict()
    if isinstance(x, (list, tuple)):
        if x and not isinstance(x[0], (list, tuple, Subspace)) and all(isinstance(c, (int,)) or hasattr(c, "numerator") for c in x):
            return [F.render(c) for c in x]
        return [_render(y, F) for y in x]
    if hasattr(x, "links"):
        return [S.render() for S in x.links]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def _emit(obj, as_json: bool):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for k, v in obj.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v, ensure_ascii=False)}")


# -- commands -------------------------------------------------------------------


def cmd_check(args) -> int:
    af, L = _load(args.file, args.allow_nonleibniz)
    F = L.field
    bad = L.right_leibniz_violation()
    rep = {
        "name": L.name,
        "field": str(F),
        "dim": L.dim,
        "right_leibniz": bad is None,
    }
    if bad is not None:
        rep["failing_triple"] = [L.labels[i] for i in bad]
        _emit(rep, args.json)
        return VIOLATION
    rep["left_leibniz"] = L.check_left_leibniz()
    rep["symmetric"] = L.check_symmetric().outcome.value
    rep["leibniz_kernel"] = L.leibniz_kernel().render()
    rep["lower_central_series"] = [S.dim for S in L.lower_central_series()]
    rep["derived_series"] = [S.dim for S in L.derived_series()]
    rep["profile"] = profile(L).to_dict()
    _emit(rep, args.json)
    return OK


PREDICATES = ("ideal", "subideal", "core", "c-ideal", "weak-c-ideal", "frattini", "cartan", "asoc",
              "supersolvable", "turner-form")


def cmd_predicate(args) -> int:
    af, L = _load(args.file, False)
    F = L.field
    name = args.predicate
    out: dict = {"predicate": name}
    if name == "ideal":
        out["result"] = L.is_ideal(_subspace(L, args.sub))
    elif name == "subideal":
        B = _subspace(L, args.sub)
        if not L.is_subalgebra(B):
            raise UsageError("subspace is not a subalgebra")
        ok, chain = is_subideal(L, B)
        out["result"] = ok
        out["chain"] = _render(chain, F)
    elif name == "core":
        out["result"] = core(L, _subspace(L, args.sub)).render()
    elif name in ("c-ideal", "weak-c-ideal"):
        fn = is_c_ideal if name == "c-ideal" else is_weak_c_ideal
        out["result"] = _render(fn(L, _subspace(L, args.sub)), F)
    elif name == "frattini":
        Fr, phi = frattini(L)
        out["frattini_subalgebra"] = Fr.render()
        out["frattini_ideal"] = phi.render()
    elif name == "cartan":
        found, v = cartan_subalgebras(L)
        out["result"] = _render(v, F)
    elif name == "asoc":
        r = asoc_result(L)
        out["result"] = r.space.render()
        out["complete"] = r.complete
    elif name == "supersolvable":
        out["result"] = _render(is_supersolvable(L), F)
    elif name == "turner-form":
        out["result"] = str(turner_form(L))
    else:
        raise UsageError(f"unknown predicate {name!r}; choose from {', '.join(PREDICATES)}")
    _emit(out, args.json)
    return OK


def cmd_enumerate(args) -> int:
    if args.field is None or args.dim is None:
        raise UsageError("enumerate needs --dim and --field")
    F = _field_arg(args.field)
    if not F.is_finite:
        raise UsageError("enumeration needs a prime field")
    corpus = enumerate_corpus(args.dim, F, jobs=args.jobs)
    golden = GOLDEN_COUNTS.get((args.dim, F.p))
    side = {"dim": args.dim, "field": str(F), "count": len(corpus), "golden": golden,
            "matches_golden": golden is None or golden == len(corpus)}
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        stem = f"corpus-GF{F.p}-dim{args.dim}"
        with open(os.path.join(args.out, stem + ".alg"), "w", encoding="utf-8") as fh:
            fh.write(dump_many(corpus.algebras))
        with open(os.path.join(args.out, stem + ".counts.json"), "w", encoding="utf-8") as fh:
            json.dump(side, fh, indent=2, sort_keys=True)
    _emit(side, args.json)
    return OK if side["matches_golden"] else VIOLATION


# default corpora per suite when --corpus is not given
def _default_specs(suite_id: str) -> list[str]:
    if suite_id == "RefuteThm5.4":
        return ["example:5", "example:7", "example:Q"]
    if suite_id == "Lem3.7":
        return ["catalog:Q"]
    s = SUITES[suite_id]
    if s.applicability == "char-0-only":
        return ["catalog:Q", "small"]
    return ["small"]


def cmd_verify(args) -> int:
    ids = list(SUITES) if args.suite == "all" else [args.suite]
    for sid in ids:
        if sid not in SUITES:
            raise UsageError(f"unknown suite {sid!r}; known: {', '.join(SUITES)}")
    cache: dict[str, list] = {}
    status = OK
    reports = []
    for sid in ids:
        specs = [args.corpus] if args.corpus else _default_specs(sid)
        ran = False
        for spec in specs:
            if spec not in cache:
                cache[spec] = corpus_from_spec(spec, jobs=args.jobs, seed=args.seed)
            for corpus in cache[spec]:
                if not applicable(sid, corpus):
                    continue
                ran = True
                rep = run_suite(sid, corpus, jobs=args.jobs)
                reports.append(rep)
                print(rep.to_text(timing=args.timing))
                if not rep.passed:
                    status = VIOLATION
        if not ran and args.suite != "all":
            raise ApplicabilityError(f"{sid} cannot run on any corpus of {' '.join(specs)}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "reports.json"), "w", encoding="utf-8") as fh:
            json.dump([r.comparable() for r in reports], fh, indent=2, sort_keys=True, ensure_ascii=False)
        with open(os.path.join(args.out, "timing.json"), "w", encoding="utf-8") as fh:
            json.dump([{"suite": r.suite, "corpus": r.corpus, "wall_time": round(r.wall_time, 3)} for r in reports],
                      fh, indent=2)
    return status


def cmd_catalog(args) -> int:
    F = _field_arg(args.field) if args.field else QQ
    if args.name is None:
        for n in cat.names(F):
            print(n)
        return OK
    try:
        entry = cat.get(args.name, F)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    notes = {}
    if entry.levi is not None:
        notes = {"levi.S": entry.levi.S, "levi.R": entry.levi.R}
    for i, vecs in enumerate(entry.cartan):
        notes[f"cartan.{i}"] = entry.algebra.span(vecs)
    text = dump(entry.algebra, notes)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leibniz", description="Exact computations with finite-dimensional Leibniz algebras.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        sp.add_argument("--seed", type=int, default=0, help="seed for random corpora")
        sp.add_argument("--out", help="output path or directory")
        sp.add_argument("--field", help="Q, GF5, GF(5) or 5")
        sp.add_argument("--dim", type=int)
        sp.add_argument("--allow-nonleibniz", action="store_true", help="load tables that fail the identity")

    sp = sub.add_parser("check", help="validate a file and print its structure")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("predicate", help="evaluate one predicate")
    sp.add_argument("file")
    sp.add_argument("predicate", choices=PREDICATES)
    sp.add_argument("--sub", help="subspace: labels or coordinate rows separated by ';'")
    common(sp)
    sp.set_defaults(fn=cmd_predicate)

    sp = sub.add_parser("enumerate", help="exhaustive corpus with golden count check")
    common(sp)
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("verify", help="run statement suites")
    sp.add_argument("suite", help="suite id or 'all'")
    sp.add_argument("--corpus", help="small | catalog | all | catalog:Q | exhaustive:DIM:P | example:P | random:DIM:P:COUNT")
    sp.add_argument("--timing", action="store_true", help="print wall times")
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("catalog", help="list catalog entries or emit one as a file")
    sp.add_argument("name", nargs="?")
    common(sp)
    sp.set_defaults(fn=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args)
    except NotLeibnizError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.triple is not None:
            print(f"failing triple: {list(exc.triple)}", file=sys.stderr)
        return USAGE
    except (UsageError, FileFormatError, FieldError, StructureError, BudgetExceeded, ApplicabilityError,
            Undecided, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
