"""Command-line front end.

Decision commands print yes/no and exit 0/1.  Constructive commands print
the result (or write it with --out).  Parse and domain errors exit 2 with
a one-line message on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import circuits as C
from . import congruence as G
from . import density as D
from . import genwords as W
from . import green as R
from . import hom as H
from .core import DEFAULT_BUDGET, Budget, ThompsonError, parse_word


class UsageError(ThompsonError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _check_k(args, k: int) -> None:
    if args.k is not None and args.k != k:
        raise UsageError(f"input uses alphabet k={k} but --k {args.k} was given")


def _hom(args, path: str) -> H.Hom:
    h = H.parse_hom(_read(path))
    _check_k(args, h.k)
    return h


def _cong(args, path: str) -> G.Congruence:
    c = G.parse_cong(_read(path))
    _check_k(args, c.k)
    return c


def _gen(args, path: str) -> W.GenWord:
    base = Path(path).parent if path != "-" else Path(".")
    w = W.parse_gen(_read(path), base)
    _check_k(args, w.gamma.k)
    return w


def _formula(text: str) -> C.Formula:
    p = Path(text)
    if not text.lstrip().startswith("(") and p.suffix and p.exists():
        text = p.read_text()
    return C.parse_formula(text)


def _budget(args) -> Budget:
    return Budget(args.budget)


# Each handler returns ("decision", bool) or ("value", kind, text, payload).


def _decision(value: bool):
    return ("decision", bool(value))


def _hom_value(h: H.Hom):
    return ("value", "hom", H.format_hom(h), {"k": h.k, "table": [list(p) for p in h.table], "text": str(h)})


def _cong_value(c: G.Congruence):
    return ("value", "cong", G.format_cong(c), {"k": c.k, "blocks": [list(b) for b in c.blocks]})


def _truth_value(f: C.TruthFun):
    return ("value", "truthfun", C.format_truthfun(f), {"m": f.m, "n": f.n, "table": list(f.table)})


def cmd_normalize(a):
    return _hom_value(H.max_extend(_hom(a, a.file)))


def cmd_compose(a):
    return _hom_value(H.compose_all(*[_hom(a, f) for f in a.files]))


def cmd_eq(a):
    return _decision(H.eq_in_M(_hom(a, a.first), _hom(a, a.second)))


def _pair(a):
    return _hom(a, a.psi), _hom(a, a.phi)


def cmd_r_leq(a):
    return _decision(R.r_leq(*_pair(a)))


def cmd_l_leq(a):
    return _decision(R.l_leq(*_pair(a)))


def cmd_r_equiv(a):
    return _decision(R.r_equiv(*_pair(a)))


def cmd_l_equiv(a):
    return _decision(R.l_equiv(*_pair(a)))


def cmd_r_mult(a):
    return _hom_value(R.r_multiplier(*_pair(a)))


def cmd_l_mult(a):
    return _hom_value(R.l_multiplier(*_pair(a)))


def cmd_inverse(a):
    return _hom_value(H.inverse(_hom(a, a.file)))


def cmd_part(a):
    return _cong_value(G.part(_hom(a, a.file)))


def cmd_func(a):
    return _hom_value(G.func(_cong(a, a.file), a.j))


def cmd_cong_max(a):
    return _cong_value(G.cong_max(_cong(a, a.file)))


def cmd_cong_refines(a):
    return _decision(G.refines_end(_cong(a, a.finer_or_equal), _cong(a, a.other)))


def cmd_cong_meet(a):
    return _cong_value(G.cong_meet(_cong(a, a.first), _cong(a, a.second)))


def cmd_cong_join(a):
    return _cong_value(G.cong_join(_cong(a, a.first), _cong(a, a.second), a.depth_limit))


def _density(fn):
    def run(a):
        return _hom_value(fn(_hom(a, a.phi), _hom(a, a.psi)))

    return run


def cmd_gen_apply(a):
    w = _gen(a, a.file)
    out = W.apply(w, parse_word(a.word, w.gamma.k))
    if out is None:
        raise UsageError(f"{a.word} is outside the domain of the word")
    return ("value", "word", (out or "-") + "\n", {"word": out})


def cmd_gen_expand(a):
    return _hom_value(W.expand_to_table(_gen(a, a.file), _budget(a)))


def cmd_gen_surjective(a):
    return _decision(W.is_surjective_program(_gen(a, a.file), _budget(a)))


def cmd_gen_rleq_pi2(a):
    return _decision(W.r_leq_pi2(_gen(a, a.psi), _gen(a, a.phi), _budget(a)))


def cmd_gen_upper_bound(a):
    return _decision(W.r_upper_bound_check(_gen(a, a.file), _hom(a, a.alpha), _budget(a)))


def _as_element(f: C.TruthFun, a):
    return _hom_value(C.to_element(f)) if a.element else _truth_value(f)


def cmd_gadget_surj(a):
    return _as_element(C.gadget_surj(_formula(a.formula), a.m, a.n), a)


def cmd_gadget_inj(a):
    f = _formula(a.formula)
    n = a.n if a.n is not None else len(C.variables(f))
    return _as_element(C.gadget_inj(f, n, else_ends_in_one=a.else_ends_in_one), a)


def _truthfun_input(a) -> C.TruthFun:
    return C.parse_truthfun(_read(a.file))


def cmd_is_surjective(a):
    return _decision(C.is_surjective_fun(_truthfun_input(a)))


def cmd_is_injective(a):
    return _decision(C.is_injective_fun(_truthfun_input(a)))


def cmd_to_element(a):
    return _hom_value(C.to_element(_truthfun_input(a)))


def cmd_qbf1(a):
    g = C.qbf1_transform(_formula(a.formula), a.fresh)
    return ("value", "formula", C.format_formula(g) + "\n", {"formula": C.format_formula(g)})


def cmd_qbf_eval(a):
    f = _formula(a.formula)
    return _decision(C.forall_exists_eval(f, a.n_forall, a.m_exists, budget=_budget(a)))


def cmd_zero_word(a):
    return _decision(C.zero_word_check(_formula(a.formula)))


def cmd_selftest(a):
    from .selftest import run_selftest

    results = run_selftest(a.seed, a.trials)
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.trials} trials, {r.failures} failures)" for r in results]
    ok = all(r.ok for r in results)
    payload = {"checks": [{"name": r.name, "trials": r.trials, "failures": r.failures} for r in results]}
    return ("report", ok, "\n".join(lines) + "\n", payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=None, help="expected alphabet size of the inputs")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="evaluation budget for brute-force searches")
    common.add_argument("--json", action="store_true", help="emit structured JSON")
    common.add_argument("--out", default=None, help="write the result to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")

    p = argparse.ArgumentParser(prog="thmonoid", description="Finite tables between prefix codes and their monoid.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *positionals):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(handler=fn)
        return sp

    add("normalize", cmd_normalize, "maximal extension of a table", "file")
    sp = sub.add_parser("compose", parents=[common], help="f1 o f2 o ... (rightmost applied first)")
    sp.add_argument("files", nargs="+")
    sp.set_defaults(handler=cmd_compose)
    add("eq", cmd_eq, "equality in the monoid", "first", "second")
    for name, fn, what in [
        ("r-leq", cmd_r_leq, "psi <=_R phi"),
        ("l-leq", cmd_l_leq, "psi <=_L phi"),
        ("r-equiv", cmd_r_equiv, "psi R-equivalent to phi"),
        ("l-equiv", cmd_l_equiv, "psi L-equivalent to phi"),
        ("r-mult", cmd_r_mult, "alpha with psi = phi alpha"),
        ("l-mult", cmd_l_mult, "alpha with psi = alpha phi"),
    ]:
        add(name, fn, what, "psi", "phi")
    add("inverse", cmd_inverse, "a table chi with phi chi phi = phi", "file")
    add("part", cmd_part, "fiber congruence of a table", "file")
    add("func", cmd_func, "block-representative idempotent of a congruence", "file").add_argument(
        "--j", type=int, default=0, choices=(0, 1)
    )
    add("cong-max", cmd_cong_max, "maximal form of a congruence", "file")
    add("cong-refines", cmd_cong_refines, "first <=_end second", "finer_or_equal", "other")
    add("cong-meet", cmd_cong_meet, "meet of two congruences", "first", "second")
    add("cong-join", cmd_cong_join, "join of two congruences", "first", "second").add_argument(
        "--depth-limit", type=int, default=None
    )
    for name, fn, what in [
        ("density-r", D.r_between, "chi with psi <_R chi <_R phi"),
        ("density-l", D.l_between, "chi with psi <_L chi <_L phi"),
        ("density-l-in-r", D.l_between_in_Rclass, "L-between witness inside one R-class"),
        ("density-r-in-l", D.r_between_in_Lclass, "R-between witness inside one L-class"),
    ]:
        add(name, _density(fn), what, "phi", "psi")
    add("gen-apply", cmd_gen_apply, "apply a generator word to a word", "file", "word")
    add("gen-expand", cmd_gen_expand, "table of a generator word", "file")
    add("gen-surjective", cmd_gen_surjective, "surjectivity of a generator word", "file")
    add("gen-rleq-pi2", cmd_gen_rleq_pi2, "psi <=_R phi for generator words", "psi", "phi")
    add("gen-upper-bound", cmd_gen_upper_bound, "Im(word) inside imC(alpha)A*", "file", "alpha")
    for name, fn, what in [("gadget-surj", cmd_gadget_surj, "surjectivity gadget"), ("gadget-inj", cmd_gadget_inj, "injectivity gadget")]:
        sp = add(name, fn, what, "formula")
        sp.add_argument("--element", action="store_true", help="emit the bridged table instead of the truth table")
        if name == "gadget-surj":
            sp.add_argument("--m", type=int, required=True, help="number of existential variables x1..xm")
            sp.add_argument("--n", type=int, required=True, help="number of universal variables y1..yn")
        else:
            sp.add_argument("--n", type=int, default=None, help="arity of the formula")
            sp.add_argument("--else-ends-in-one", action="store_true", help="use the (0,...,0,1) else-output")
    for name, fn, what in [
        ("is-surjective", cmd_is_surjective, "surjectivity of a truth table"),
        ("is-injective", cmd_is_injective, "injectivity of a truth table"),
        ("to-element", cmd_to_element, "truth table as a table over {a,b}"),
    ]:
        add(name, fn, what).add_argument("file", nargs="?", default="-")
    add("qbf1", cmd_qbf1, "formula or b, with b a fresh universal variable", "formula").add_argument("--fresh", default="b")
    sp = add("qbf-eval", cmd_qbf_eval, "forall-exists truth, existential block first", "formula")
    sp.add_argument("--n-forall", type=int, required=True)
    sp.add_argument("--m-exists", type=int, required=True)
    add("zero-word", cmd_zero_word, "id_{aA*} o B = 0", "formula")
    add("selftest", cmd_selftest, "randomised oracle cross-checks").add_argument("--trials", type=int, default=200)
    return p


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        res = args.handler(args)
    except (ThompsonError, AssertionError, RecursionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if res[0] == "decision":
        ok = res[1]
        _emit(json.dumps({"command": args.command, "result": ok}) + "\n" if args.json else ("yes\n" if ok else "no\n"), args)
        return 0 if ok else 1
    if res[0] == "report":
        _, ok, text, payload = res
        _emit(json.dumps({"command": args.command, "ok": ok, **payload}) + "\n" if args.json else text, args)
        return 0 if ok else 1
    _, kind, text, payload = res
    _emit(json.dumps({"command": args.command, "kind": kind, **payload}) + "\n" if args.json else text, args)
    return 0


def main() -> None:
    sys.exit(run())
