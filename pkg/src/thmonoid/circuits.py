"""Boolean formulas, truth tables, the hardness gadgets, and the bridge into the k=2 monoid.

Bit 0 is read as letter a and bit 1 as letter b.  Variables x1..xm form the
existential block and come first; y1..yn (and any further names) follow.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import Budget, DomainError, ParseError
from .hom import Hom, compose, eq_in_M, identity, zero

OPS = ("not", "and", "or", "xor")


@dataclass(frozen=True)
class Formula:
    op: str  # "var", "const", or one of OPS
    args: tuple = ()
    name: str = ""
    value: int = 0

    def __str__(self) -> str:
        return format_formula(self)


def var(name: str) -> Formula:
    return Formula("var", name=name)


def const(value: int) -> Formula:
    return Formula("const", value=int(bool(value)))


def Not(f: Formula) -> Formula:
    return Formula("not", (f,))


def And(*fs: Formula) -> Formula:
    return Formula("and", tuple(fs))


def Or(*fs: Formula) -> Formula:
    return Formula("or", tuple(fs))


def Xor(*fs: Formula) -> Formula:
    return Formula("xor", tuple(fs))


def _var_key(name: str):
    m = re.fullmatch(r"([a-z_]+)(\d*)", name)
    stem, num = (m.group(1), int(m.group(2) or 0)) if m else (name, 0)
    return (stem != "x", stem, num, name)


def variables(f: Formula) -> list[str]:
    """Variable names in block order: x-variables first, then the rest."""
    names: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g.op == "var":
            names.add(g.name)
        stack.extend(g.args)
    return sorted(names, key=_var_key)


def block_variables(m: int, n: int) -> list[str]:
    return [f"x{i}" for i in range(1, m + 1)] + [f"y{j}" for j in range(1, n + 1)]


def _eval(f: Formula, env: dict[str, int]) -> int:
    if f.op == "var":
        return env[f.name]
    if f.op == "const":
        return f.value
    vals = [_eval(g, env) for g in f.args]
    if f.op == "not":
        return 1 - vals[0]
    if f.op == "and":
        return int(all(vals))
    if f.op == "or":
        return int(any(vals))
    if f.op == "xor":
        return sum(vals) % 2
    raise DomainError(f"unknown operator {f.op}")


def eval_formula(f: Formula, assignment: Sequence[int], names: Sequence[str] | None = None) -> int:
    names = list(names) if names is not None else variables(f)
    if len(assignment) != len(names):
        raise DomainError(f"formula has arity {len(names)}, got {len(assignment)} bits")
    missing = set(variables(f)) - set(names)
    if missing:
        raise DomainError(f"unbound variables {sorted(missing)}")
    return _eval(f, dict(zip(names, (int(b) for b in assignment))))


def _resolve(f: Formula, names: Sequence[str] | None, arity: int | None = None) -> list[str]:
    names = list(names) if names is not None else variables(f)
    if arity is not None and len(names) != arity:
        raise DomainError(f"expected {arity} variables, found {len(names)}: {names}")
    missing = set(variables(f)) - set(names)
    if missing:
        raise DomainError(f"unbound variables {sorted(missing)}")
    return names


def forall_exists_eval(
    f: Formula,
    n_forall: int,
    m_exists: int,
    names: Sequence[str] | None = None,
    budget: Budget | None = None,
) -> bool:
    """for all y in {0,1}^n exists x in {0,1}^m: f(x, y) = 1, x listed first."""
    names = _resolve(f, names, n_forall + m_exists)
    budget = budget or Budget()
    for y in product((0, 1), repeat=n_forall):
        for x in product((0, 1), repeat=m_exists):
            budget.spend()
            if _eval(f, dict(zip(names, x + y))):
                break
        else:
            return False
    return True


def is_tautology(f: Formula, names: Sequence[str] | None = None) -> bool:
    names = _resolve(f, names)
    return all(_eval(f, dict(zip(names, bits))) for bits in product((0, 1), repeat=len(names)))


def qbf1_transform(f: Formula, fresh: str = "b") -> Formula:
    """f or b, with b a new universally quantified variable."""
    if fresh in variables(f):
        raise DomainError(f"variable {fresh} already occurs")
    return Or(var(fresh), f)


@dataclass(frozen=True)
class TruthFun:
    m: int
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 2**self.m:
            raise DomainError(f"table needs {2**self.m} rows, got {len(self.table)}")
        if any(not 0 <= v < 2**self.n for v in self.table):
            raise DomainError(f"row value out of range for {self.n} output bits")

    def __call__(self, bits: Sequence[int]) -> tuple[int, ...]:
        return to_bits(self.table[from_bits(bits)], self.n)


def to_bits(v: int, width: int) -> tuple[int, ...]:
    return tuple((v >> (width - 1 - i)) & 1 for i in range(width))


def from_bits(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        v = 2 * v + int(b)
    return v


def truthfun_of(f: Formula, names: Sequence[str] | None = None) -> TruthFun:
    names = _resolve(f, names)
    rows = tuple(_eval(f, dict(zip(names, bits))) for bits in product((0, 1), repeat=len(names)))
    return TruthFun(len(names), 1, rows)


def gadget_surj(f: Formula, m: int, n: int, names: Sequence[str] | None = None) -> TruthFun:
    """C(x, y) = y if f(x, y) = 1, else 1^n."""
    names = _resolve(f, names if names is not None else block_variables(m, n), m + n)
    if not _eval(f, {v: 1 for v in names}):
        raise DomainError("the formula must be true on the all-ones assignment")
    ones = 2**n - 1
    rows = []
    for bits in product((0, 1), repeat=m + n):
        rows.append(from_bits(bits[m:]) if _eval(f, dict(zip(names, bits))) else ones)
    return TruthFun(m + n, n, tuple(rows))


def gadget_inj(f: Formula, n: int, names: Sequence[str] | None = None, else_ends_in_one: bool = False) -> TruthFun:
    """F(x, b) = (x, b) if f(x) = 1 or b = 0, else 0^{n+1}.

    With ``else_ends_in_one=True`` the else-branch is (0, ..., 0, 1); that variant is
    the identity whenever f fails only at 0^n, so it does not detect those
    non-tautologies.
    """
    names = _resolve(f, names if names is not None else [f"x{i}" for i in range(1, n + 1)], n)
    fallback = 1 if else_ends_in_one else 0
    rows = []
    for bits in product((0, 1), repeat=n + 1):
        x, b = bits[:n], bits[n]
        rows.append(from_bits(bits) if (b == 0 or _eval(f, dict(zip(names, x)))) else fallback)
    return TruthFun(n + 1, n + 1, tuple(rows))


def is_surjective_fun(f: TruthFun) -> bool:
    return len(set(f.table)) == 2**f.n


def is_injective_fun(f: TruthFun) -> bool:
    return len(set(f.table)) == len(f.table)


def bits_to_word(bits: Sequence[int]) -> str:
    return "".join("b" if b else "a" for b in bits)


def to_element(f: TruthFun) -> Hom:
    pairs = []
    for i, bits in enumerate(product((0, 1), repeat=f.m)):
        pairs.append((bits_to_word(bits), bits_to_word(to_bits(f.table[i], f.n))))
    return Hom.from_pairs(2, pairs)


def zero_word_check(f: Formula, names: Sequence[str] | None = None) -> bool:
    """id_{aA*} o B is the zero element; true exactly for tautologies."""
    elem = to_element(truthfun_of(f, names))
    return eq_in_M(compose(identity(2, ["a"]), elem), zero(2))


def parse_formula(text: str) -> Formula:
    tokens = re.findall(r"\(|\)|[^\s()]+", text)
    if not tokens:
        raise ParseError("empty formula")
    pos = 0

    def parse() -> Formula:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of formula")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens):
                raise ParseError("unexpected end of formula")
            op = tokens[pos]
            pos += 1
            if op not in OPS:
                raise ParseError(f"unknown operator {op!r}")
            args = []
            while pos < len(tokens) and tokens[pos] != ")":
                args.append(parse())
            if pos >= len(tokens):
                raise ParseError("missing ')'")
            pos += 1
            if op == "not" and len(args) != 1:
                raise ParseError("'not' takes exactly one argument")
            if op != "not" and not args:
                raise ParseError(f"'{op}' needs at least one argument")
            return Formula(op, tuple(args))
        if tok == ")":
            raise ParseError("unexpected ')'")
        if tok in ("0", "1"):
            return const(int(tok))
        if not re.fullmatch(r"[a-z_][a-z_0-9]*", tok):
            raise ParseError(f"bad variable name {tok!r}")
        return var(tok)

    out = parse()
    if pos != len(tokens):
        raise ParseError("trailing tokens after formula")
    return out


def format_formula(f: Formula) -> str:
    if f.op == "var":
        return f.name
    if f.op == "const":
        return str(f.value)
    return "(" + f.op + " " + " ".join(format_formula(g) for g in f.args) + ")"


def format_truthfun(f: TruthFun) -> str:
    wi, wo = max(1, (f.m + 3) // 4), max(1, (f.n + 3) // 4)
    lines = [f"truthfun m={f.m} n={f.n}"]
    lines += [f"{i:0{wi}x} {v:0{wo}x}" for i, v in enumerate(f.table)]
    return "\n".join(lines) + "\n"


def parse_truthfun(text: str) -> TruthFun:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    head = re.fullmatch(r"truthfun m=(\d+) n=(\d+)", lines[0]) if lines else None
    if head is None:
        raise ParseError("expected header 'truthfun m=<m> n=<n>'")
    m, n = int(head.group(1)), int(head.group(2))
    rows = []
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        try:
            idx, val = int(parts[0], 16), int(parts[1], 16)
        except (ValueError, IndexError):
            raise ParseError(f"bad truth table row {ln!r}") from None
        if idx != i:
            raise ParseError(f"row {ln!r} out of order")
        rows.append(val)
    try:
        return TruthFun(m, n, tuple(rows))
    except DomainError as e:
        raise ParseError(str(e)) from None
