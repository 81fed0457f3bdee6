"""Element labels and set literals.

Dihedral groups read and print ``x^i`` / ``y`` / ``x^i*y``, cyclic groups
``x^i``, generalized quaternion groups ``a^i`` / ``b`` / ``a^i*b``.  Plain
integers are element indices and work for every group.
"""

from .errors import SpecParseError
from .groups import Group, as_cyclic, as_dihedral, as_generalized_quaternion
from .sets import ElementSet


def element_label(g: Group, index: int) -> str:
    """Human-readable label for one element."""
    if not 0 <= index < g.order:
        raise ValueError(f"element index {index} out of range 0..{g.order - 1}")
    if index == 0:
        return "1"
    n = as_dihedral(g)
    if n is not None:
        if index < n:
            return _power("x", index)
        i = index - n
        return "y" if i == 0 else f"{_power('x', i)}*y"
    n = as_generalized_quaternion(g)
    if n is not None:
        if index < 2 * n:
            return _power("a", index)
        i = index - 2 * n
        return "b" if i == 0 else f"{_power('a', i)}*b"
    if as_cyclic(g) is not None:
        return _power("x", index)
    return str(index)


def _power(symbol: str, exponent: int) -> str:
    return symbol if exponent == 1 else f"{symbol}^{exponent}"


def set_label(g: Group, s: ElementSet) -> str:
    return "{" + ", ".join(element_label(g, i) for i in s) + "}"


def parse_set_literal(text: str, g: Group) -> ElementSet:
    """Parse a set literal like ``{x^2, x^3, y, x^6*y}`` or ``{1, 5, 9}``."""
    stripped = text.strip()
    offset = text.index(stripped) if stripped else 0
    if stripped.startswith("{"):
        if not stripped.endswith("}"):
            raise SpecParseError("unclosed '{' in set literal",
                                 offset + len(stripped))
        stripped = stripped[1:-1]
        offset += 1
    if not stripped.strip():
        raise SpecParseError("empty set literal", offset)
    bits = 0
    pos = offset
    for token in stripped.split(","):
        token_start = pos + (len(token) - len(token.lstrip()))
        index = _parse_element(token.strip(), g, token_start)
        bits |= 1 << index
        pos += len(token) + 1
    return ElementSet(bits, g.order)


def _parse_element(token: str, g: Group, pos: int) -> int:
    if not token:
        raise SpecParseError("empty element in set literal", pos)
    if token.isdigit() or (token[0] == "-" and token[1:].isdigit()):
        index = int(token)
        if not 0 <= index < g.order:
            raise SpecParseError(
                f"element index {index} out of range 0..{g.order - 1}", pos)
        return index
    dihedral_n = as_dihedral(g)
    quaternion_n = as_generalized_quaternion(g)
    cyclic_n = as_cyclic(g)
    if dihedral_n is not None:
        return _parse_word(token, "x", "y", dihedral_n, dihedral_n, pos)
    if quaternion_n is not None:
        return _parse_word(token, "a", "b", 2 * quaternion_n,
                           2 * quaternion_n, pos)
    if cyclic_n is not None:
        index = _parse_power(token, "x", pos)
        return index % cyclic_n
    raise SpecParseError(
        f"element {token!r} not recognized; this group uses integer indices",
        pos)


def _parse_word(token: str, rot_symbol: str, ref_symbol: str,
                modulus: int, ref_offset: int, pos: int) -> int:
    if "*" in token:
        head, _, tail = token.partition("*")
        if tail.strip() != ref_symbol:
            raise SpecParseError(
                f"expected '{ref_symbol}' after '*', got {tail.strip()!r}", pos)
        exponent = _parse_power(head.strip(), rot_symbol, pos)
        return ref_offset + exponent % modulus
    if token == ref_symbol:
        return ref_offset
    return _parse_power(token, rot_symbol, pos) % modulus


def _parse_power(token: str, symbol: str, pos: int) -> int:
    if token == symbol:
        return 1
    if token.startswith(symbol + "^"):
        exponent = token[len(symbol) + 1:]
        sign = 1
        if exponent.startswith("-"):
            sign, exponent = -1, exponent[1:]
        if exponent.isdigit():
            return sign * int(exponent)
    raise SpecParseError(f"cannot parse element {token!r}", pos)
