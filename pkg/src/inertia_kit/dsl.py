"""Family-spec mini language.

Examples::

    path(5)  cycle(6)  paths(2,3)  star(2,2,5)  bouquet(3,4)
    supernova(cycles=3,4; arms=2,2,5)
    pulsar(nova(cycles=3;arms=2), nova(cycles=;arms=1,1), bridge=6, gap=2)
    binarystar(nova(cycles=3;arms=), nova(cycles=;arms=1), w=3)
    kbip(2,3)  bjoin(2,3,2,2,AD)  join(cycle(5), path(3)@1)  union(path(2), cycle(3))
"""

from __future__ import annotations

from . import graphs as gr
from .errors import InvalidSpec, ParseError

__all__ = ["parse_family_spec", "format_family_spec"]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, msg, expected=None, pos=None):
        line, col = self.where(pos)
        raise ParseError(msg, line, col, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.fail(f"found {found!r}", repr(ch))
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            self.fail("missing name", "identifier")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("missing number", "integer")
        return int(self.text[start:self.pos])

    def int_list(self, stop: str) -> tuple:
        """Comma-separated integers, possibly empty, up to (not eating) ``stop``."""
        out = []
        if self.peek() in stop:
            return ()
        out.append(self.integer())
        while self.peek() == ",":
            save = self.pos
            self.pos += 1
            if not self.peek().isdigit():
                self.pos = save
                break
            out.append(self.integer())
        return tuple(out)

    def keyword(self, key: str):
        at = self.pos
        got = self.name()
        if got != key:
            self.fail(f"found {got!r}", repr(key), at)
        self.expect("=")

    def nova_body(self, sep: str) -> gr.Supernova:
        self.keyword("cycles")
        cycles = self.int_list(sep + ")")
        self.expect(sep)
        self.keyword("arms")
        arms = self.int_list(")")
        return gr.Supernova(cycles, arms)

    def nova(self) -> gr.Supernova:
        at = self.pos
        if self.name() != "nova":
            self.fail("expected a nova(...) term", "'nova'", at)
        self.expect("(")
        spec = self.nova_body(";")
        self.expect(")")
        return spec

    def anchored(self):
        spec = self.spec()
        vertex = 0
        if self.accept("@"):
            vertex = self.integer()
        return spec, vertex

    def spec(self):
        at = self.pos
        head = self.name().lower()
        self.expect("(")
        if head == "path":
            spec = gr.Path(self.integer())
        elif head == "cycle":
            spec = gr.Cycle(self.integer())
        elif head == "paths":
            spec = gr.DisjointPaths(self.int_list(")"))
        elif head == "star":
            spec = gr.GeneralizedStar(self.int_list(")"))
        elif head == "bouquet":
            spec = gr.Bouquet(self.int_list(")"))
        elif head in ("supernova", "nova"):
            spec = self.nova_body(";")
        elif head == "pulsar":
            s1 = self.nova()
            self.expect(",")
            s2 = self.nova()
            self.expect(",")
            self.keyword("bridge")
            bridge = self.integer()
            gap = 2
            if self.accept(","):
                self.keyword("gap")
                gap = self.integer()
            spec = gr.Pulsar(s1, s2, bridge, gap)
        elif head == "binarystar":
            s1 = self.nova()
            self.expect(",")
            s2 = self.nova()
            self.expect(",")
            self.keyword("w")
            spec = gr.BinaryStar(s1, s2, self.integer())
        elif head == "kbip":
            a = self.integer()
            self.expect(",")
            spec = gr.CompleteBipartite(a, self.integer())
        elif head == "bjoin":
            nums = []
            for _ in range(4):
                nums.append(self.integer())
                self.expect(",")
            case = self.name().upper()
            spec = gr.BipartiteJoin(*nums, case)
        elif head == "join":
            left, lv = self.anchored()
            self.expect(",")
            right, rv = self.anchored()
            spec = gr.Join(left, right, lv, rv)
        elif head == "union":
            parts = [self.spec()]
            while self.accept(","):
                parts.append(self.spec())
            spec = gr.DisjointUnion(tuple(parts))
        else:
            self.fail(f"unknown family {head!r}", "a family name", at)
        self.expect(")")
        return spec


def parse_family_spec(text: str, validate: bool = True) -> gr.FamilySpec:
    """Parse a spec; with ``validate`` it is also built, so bad parameters raise :class:`InvalidSpec`."""
    p = _Parser(text)
    spec = p.spec()
    if p.peek():
        p.fail(f"trailing input {p.text[p.pos:]!r}", "end of input")
    if validate:
        gr.build(spec)
    return spec


def _ints(xs) -> str:
    return ",".join(str(x) for x in xs)


def _nova(s: gr.Supernova) -> str:
    return f"nova(cycles={_ints(s.cycle_sizes)};arms={_ints(s.arm_sizes)})"


def format_family_spec(spec: gr.FamilySpec) -> str:
    if isinstance(spec, gr.Path):
        return f"path({spec.n})"
    if isinstance(spec, gr.Cycle):
        return f"cycle({spec.n})"
    if isinstance(spec, gr.DisjointPaths):
        return f"paths({_ints(spec.sizes)})"
    if isinstance(spec, gr.GeneralizedStar):
        return f"star({_ints(spec.arm_sizes)})"
    if isinstance(spec, gr.Bouquet):
        return f"bouquet({_ints(spec.cycle_sizes)})"
    if isinstance(spec, gr.Supernova):
        return f"supernova(cycles={_ints(spec.cycle_sizes)}; arms={_ints(spec.arm_sizes)})"
    if isinstance(spec, gr.Pulsar):
        return (f"pulsar({_nova(spec.s1)}, {_nova(spec.s2)}, "
                f"bridge={spec.bridge_cycle_size}, gap={spec.gap})")
    if isinstance(spec, gr.BinaryStar):
        return f"binarystar({_nova(spec.s1)}, {_nova(spec.s2)}, w={spec.w})"
    if isinstance(spec, gr.CompleteBipartite):
        return f"kbip({spec.a},{spec.b})"
    if isinstance(spec, gr.BipartiteJoin):
        return f"bjoin({spec.a},{spec.b},{spec.c},{spec.d},{spec.case})"
    if isinstance(spec, gr.Join):
        left = format_family_spec(spec.left) + (f"@{spec.left_vertex}" if spec.left_vertex else "")
        right = format_family_spec(spec.right) + (f"@{spec.right_vertex}" if spec.right_vertex else "")
        return f"join({left}, {right})"
    if isinstance(spec, gr.DisjointUnion):
        return "union(" + ", ".join(format_family_spec(s) for s in spec.specs) + ")"
    raise InvalidSpec(f"cannot format {spec!r}")
