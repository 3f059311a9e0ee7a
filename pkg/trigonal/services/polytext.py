# trigonal/services/polytext.py
"""
Polynomial text such as "x^4 - 0.8x^3 - 6x^2 + 13" or "x^2 + a", read into
coefficient tables. Coefficients are real decimals; `i` is the imaginary unit.
Factors multiply by juxtaposition or `*` and may be parenthesized groups
with an integer power, as in "(x + 1)^2 (x - a)".
"""
import re
from typing import Dict, List, Optional, Tuple

from trigonal.core.errors import ParseError
from trigonal.models.poly import Poly

TOKEN = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)|([A-Za-z_]\w*)|(\*\*|[-+*^()]))")

Table = Dict[Tuple[int, int], complex]


def _product(a: Table, b: Table) -> Table:
    out: Table = {}
    for (xa, pa), ca in a.items():
        for (xb, pb), cb in b.items():
            key = (xa + xb, pa + pb)
            out[key] = out.get(key, 0j) + ca * cb
    return out


def _power(table: Table, k: int) -> Table:
    out: Table = {(0, 0): 1 + 0j}
    for _ in range(k):
        out = _product(out, table)
    return out


def _tokens(text: str, path: str) -> List[Tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}", path, {"offset": pos})
        number, name, op = m.groups()
        if number is not None:
            out.append(("num", number))
        elif name is not None:
            out.append(("name", name))
        elif op is not None:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Reader:
    def __init__(self, text: str, param: Optional[str], path: str):
        self.text = text
        self.tokens = _tokens(text, path)
        self.pos = 0
        self.param = param
        self.path = path

    def error(self, message: str) -> ParseError:
        return ParseError(f"{message} in {self.text!r}", self.path, {"token": self.pos})

    def peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Tuple[str, str]:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end")
        self.pos += 1
        return token

    def exponent(self) -> int:
        if self.peek() != ("op", "^"):
            return 1
        self.take()
        kind, value = self.take()
        if kind != "num" or not value.isdigit():
            raise self.error("exponents must be nonnegative integers")
        return int(value)

    def factor(self) -> Table:
        kind, value = self.take()
        if (kind, value) == ("op", "("):
            inner = self.polynomial()
            if self.peek() != ("op", ")"):
                raise self.error("missing ')'")
            self.take()
            return _power(inner, self.exponent())
        if kind == "num":
            return {(0, 0): complex(float(value) ** self.exponent())}
        if kind == "name":
            k = self.exponent()
            if value == "x":
                return {(k, 0): 1 + 0j}
            if self.param is not None and value == self.param:
                return {(0, k): 1 + 0j}
            if value == "i":
                return {(0, 0): 1j ** k}
            raise self.error(f"unknown symbol {value!r}")
        raise self.error(f"unexpected {value!r}")

    def term(self) -> Table:
        table: Table = {(0, 0): 1 + 0j}
        seen = False
        while True:
            token = self.peek()
            if token is None or token in (("op", "+"), ("op", "-"), ("op", ")")):
                break
            if token == ("op", "*"):
                if not seen:
                    raise self.error("dangling '*'")
                self.take()
                continue
            table = _product(table, self.factor())
            seen = True
        if not seen:
            raise self.error("empty term")
        return table

    def polynomial(self) -> Table:
        """Signed sum of terms, up to the end of the text or a closing ')'"""
        table: Table = {}
        sign = 1.0
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1.0 if self.take()[1] == "-" else 1.0
        while True:
            for key, value in self.term().items():
                table[key] = table.get(key, 0j) + sign * value
            token = self.peek()
            if token is None or token == ("op", ")"):
                return table
            sign = -1.0 if self.take()[1] == "-" else 1.0


def parse_table(text: str, param: Optional[str] = None, path: str = "") -> Table:
    """Coefficient table {(power of x, power of param): coefficient}"""
    if not text or not text.strip():
        raise ParseError("empty polynomial", path)
    reader = _Reader(text, param, path)
    table = reader.polynomial()
    if reader.peek() is not None:
        raise reader.error("unbalanced ')'")
    return table


def parse_poly(text: str, path: str = "") -> Poly:
    table = parse_table(text, None, path)
    degree = max(i for i, _ in table)
    coeffs = [0j] * (degree + 1)
    for (i, _), value in table.items():
        coeffs[i] += value
    return Poly(tuple(coeffs))
