"""Plain-text formats for covering instances, solutions, and bribery inputs.

All formats are line oriented with single-space separators and LF newlines;
lines starting with ``#`` and blank lines are skipped.  Serialization is
canonical: directives appear in a fixed order, element and index lists are
strictly increasing, and optional directives are omitted at their defaults,
so serializing a parsed canonical file reproduces it byte for byte.

Covering instance (``scp``)::

    scp 1
    mode demands|capacities
    n <n>
    m <m>
    k <k>
    multiplicities on          # only when on
    bounds b_1 ... b_n
    prices p_1 ... p_m         # only when priced, together with pricebudget
    pricebudget <t>
    set <j> <size> e_1 ... e_size   # j = 1..m in order

Solution: ``solution <k>`` then ``pick i_1 ... i_k``, or ``mult <k>`` then
``counts l_1 ... l_m``.  Bribery instance (``gib``): ``n``/``s``/``t``/``ell``
directives, ``targets <count> a_1 ... a_count``, then one
``row <i> v_1 ... v_n`` line per agent with entries in ``{-1, 1}``.  A bribe
witness is ``bribes <count>`` then ``agents a_1 ... a_count``.
"""

from __future__ import annotations

from .bribery import BriberyInstance, QualificationProfile
from .core import Mode, MultiSolution, SetCoverInstance, SetSolution, Solution


class ParseError(ValueError):
    """Input rejected, pointing at the offending line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class _Lines:
    def __init__(self, text: str):
        raw = text.splitlines()
        self.eof = len(raw) + 1
        self.items = [
            (no, line.split())
            for no, line in enumerate(raw, start=1)
            if line.strip() and not line.lstrip().startswith("#")
        ]
        self.pos = 0

    def peek(self) -> str | None:
        if self.pos >= len(self.items):
            return None
        return self.items[self.pos][1][0]

    def take(self, directive: str, exact: int | None = None) -> tuple[int, list[str]]:
        if self.pos >= len(self.items):
            raise ParseError(self.eof, f"missing '{directive}' line")
        lineno, tokens = self.items[self.pos]
        if tokens[0] != directive:
            raise ParseError(lineno, f"expected '{directive}', found '{tokens[0]}'")
        self.pos += 1
        args = tokens[1:]
        if exact is not None and len(args) != exact:
            raise ParseError(
                lineno, f"'{directive}' takes {exact} value(s), got {len(args)}"
            )
        return lineno, args

    def finish(self) -> None:
        if self.pos < len(self.items):
            lineno, tokens = self.items[self.pos]
            raise ParseError(lineno, f"unexpected directive '{tokens[0]}'")


def _ints(lineno: int, directive: str, args: list[str], lo: int | None = None) -> list[int]:
    values = []
    for a in args:
        try:
            v = int(a)
        except ValueError:
            raise ParseError(lineno, f"'{directive}': not an integer: {a!r}") from None
        if lo is not None and v < lo:
            raise ParseError(lineno, f"'{directive}': value {v} below {lo}")
        values.append(v)
    return values


def _increasing(lineno: int, directive: str, values: list[int]) -> None:
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise ParseError(lineno, f"'{directive}': values must be strictly increasing")


def parse_setcover(text: str) -> SetCoverInstance:
    lines = _Lines(text)
    lineno, args = lines.take("scp", exact=1)
    if args != ["1"]:
        raise ParseError(lineno, f"unsupported format version {args[0]!r}")
    lineno, args = lines.take("mode", exact=1)
    try:
        mode = Mode(args[0])
    except ValueError:
        raise ParseError(
            lineno, f"mode must be 'demands' or 'capacities', got {args[0]!r}"
        ) from None
    lineno, args = lines.take("n", exact=1)
    n = _ints(lineno, "n", args, lo=0)[0]
    lineno, args = lines.take("m", exact=1)
    m = _ints(lineno, "m", args, lo=0)[0]
    lineno, args = lines.take("k", exact=1)
    k = _ints(lineno, "k", args, lo=0)[0]
    multiplicities = False
    if lines.peek() == "multiplicities":
        lineno, args = lines.take("multiplicities", exact=1)
        if args[0] not in ("on", "off"):
            raise ParseError(lineno, f"multiplicities must be 'on' or 'off', got {args[0]!r}")
        multiplicities = args[0] == "on"
    lineno, args = lines.take("bounds")
    bounds = _ints(lineno, "bounds", args, lo=0)
    if len(bounds) != n:
        raise ParseError(lineno, f"expected {n} bounds, got {len(bounds)}")
    prices = None
    price_budget = None
    if lines.peek() == "prices":
        lineno, args = lines.take("prices")
        prices = _ints(lineno, "prices", args, lo=0)
        if len(prices) != m:
            raise ParseError(lineno, f"expected {m} prices, got {len(prices)}")
        lineno, args = lines.take("pricebudget", exact=1)
        price_budget = _ints(lineno, "pricebudget", args, lo=0)[0]
    family = []
    for j in range(1, m + 1):
        lineno, args = lines.take("set")
        values = _ints(lineno, "set", args)
        if len(values) < 2:
            raise ParseError(lineno, "'set' needs an index and a size")
        if values[0] != j:
            raise ParseError(lineno, f"expected set {j}, got set {values[0]}")
        size, elements = values[1], values[2:]
        if size < 0 or len(elements) != size:
            raise ParseError(
                lineno, f"set {j}: size {size} does not match {len(elements)} element(s)"
            )
        _increasing(lineno, "set", elements)
        for e in elements:
            if not 1 <= e <= n:
                raise ParseError(lineno, f"set {j}: element {e} outside 1..{n}")
        family.append(frozenset(elements))
    lines.finish()
    try:
        return SetCoverInstance(
            n=n,
            family=tuple(family),
            mode=mode,
            bounds=tuple(bounds),
            k=k,
            prices=tuple(prices) if prices is not None else None,
            price_budget=price_budget,
            multiplicities=multiplicities,
        )
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def _line(directive: str, values) -> str:
    values = list(values)
    if not values:
        return directive
    return " ".join([directive, *map(str, values)])


def serialize_setcover(instance: SetCoverInstance) -> str:
    out = [
        "scp 1",
        f"mode {instance.mode.value}",
        f"n {instance.n}",
        f"m {instance.m}",
        f"k {instance.k}",
    ]
    if instance.multiplicities:
        out.append("multiplicities on")
    out.append(_line("bounds", instance.bounds))
    if instance.prices is not None:
        out.append(_line("prices", instance.prices))
        out.append(f"pricebudget {instance.price_budget}")
    for j, f in enumerate(instance.family, start=1):
        elements = sorted(f)
        out.append(_line("set", [j, len(elements), *elements]))
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> Solution:
    lines = _Lines(text)
    head = lines.peek()
    if head == "solution":
        lineno, args = lines.take("solution", exact=1)
        k = _ints(lineno, "solution", args, lo=0)[0]
        lineno, args = lines.take("pick")
        picks = _ints(lineno, "pick", args, lo=1)
        _increasing(lineno, "pick", picks)
        if len(picks) != k:
            raise ParseError(lineno, f"expected {k} picks, got {len(picks)}")
        lines.finish()
        return SetSolution(tuple(picks))
    if head == "mult":
        lineno, args = lines.take("mult", exact=1)
        k = _ints(lineno, "mult", args, lo=0)[0]
        lineno, args = lines.take("counts")
        counts = _ints(lineno, "counts", args, lo=0)
        if sum(counts) != k:
            raise ParseError(lineno, f"counts sum to {sum(counts)}, expected {k}")
        lines.finish()
        return MultiSolution(tuple(counts))
    lineno = lines.items[0][0] if lines.items else lines.eof
    raise ParseError(lineno, "expected a 'solution' or 'mult' block")


def serialize_solution(solution: Solution) -> str:
    if isinstance(solution, SetSolution):
        return f"solution {len(solution.picks)}\n{_line('pick', solution.picks)}\n"
    return f"mult {sum(solution.counts)}\n{_line('counts', solution.counts)}\n"


def parse_bribery(text: str) -> BriberyInstance:
    lines = _Lines(text)
    lineno, args = lines.take("gib", exact=1)
    if args != ["1"]:
        raise ParseError(lineno, f"unsupported format version {args[0]!r}")
    lineno, args = lines.take("n", exact=1)
    n = _ints(lineno, "n", args, lo=0)[0]
    lineno, args = lines.take("s", exact=1)
    s = _ints(lineno, "s", args, lo=1)[0]
    lineno, args = lines.take("t", exact=1)
    t = _ints(lineno, "t", args, lo=1)[0]
    lineno, args = lines.take("ell", exact=1)
    ell = _ints(lineno, "ell", args, lo=0)[0]
    lineno, args = lines.take("targets")
    values = _ints(lineno, "targets", args)
    if not values:
        raise ParseError(lineno, "'targets' needs a count")
    count, targets = values[0], values[1:]
    if count < 0 or len(targets) != count:
        raise ParseError(lineno, f"expected {count} target(s), got {len(targets)}")
    _increasing(lineno, "targets", targets)
    rows = []
    for i in range(1, n + 1):
        lineno, args = lines.take("row")
        values = _ints(lineno, "row", args)
        if not values or values[0] != i:
            raise ParseError(lineno, f"expected row {i}")
        entries = values[1:]
        if len(entries) != n:
            raise ParseError(lineno, f"row {i} has {len(entries)} entries, expected {n}")
        if any(v not in (-1, 1) for v in entries):
            raise ParseError(lineno, f"row {i}: opinions must be -1 or 1")
        rows.append(tuple(entries))
    lines.finish()
    try:
        profile = QualificationProfile(n, tuple(rows))
        return BriberyInstance(profile=profile, targets=tuple(targets), s=s, t=t, ell=ell)
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def serialize_bribery(instance: BriberyInstance) -> str:
    out = [
        "gib 1",
        f"n {instance.profile.n}",
        f"s {instance.s}",
        f"t {instance.t}",
        f"ell {instance.ell}",
        _line("targets", [len(instance.targets), *instance.targets]),
    ]
    for i, row in enumerate(instance.profile.rows, start=1):
        out.append(_line("row", [i, *row]))
    return "\n".join(out) + "\n"


def parse_bribes(text: str) -> tuple[int, ...]:
    lines = _Lines(text)
    lineno, args = lines.take("bribes", exact=1)
    count = _ints(lineno, "bribes", args, lo=0)[0]
    lineno, args = lines.take("agents")
    agents = _ints(lineno, "agents", args, lo=1)
    _increasing(lineno, "agents", agents)
    if len(agents) != count:
        raise ParseError(lineno, f"expected {count} agent(s), got {len(agents)}")
    lines.finish()
    return tuple(agents)


def serialize_bribes(agents) -> str:
    agents = tuple(sorted(agents))
    return f"bribes {len(agents)}\n{_line('agents', agents)}\n"
