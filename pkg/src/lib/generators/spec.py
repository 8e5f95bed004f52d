"""
Generator specifications: a family tag, its parameters and a seed.

A spec is written the way the CLI receives it, e.g. `paley 13`,
`gnp 100 0.1`, or `blowup 3 cycle 5` (blow-up factor, then the base spec).
"""

from dataclasses import dataclass

from lib.utils.errors import GeneratorError

from . import families

# family -> ((parameter name, type), ...), uses seed
FAMILIES = {
    'gnp': ((('n', int), ('p', float)), True),
    'bipartite_random': ((('n1', int), ('n2', int), ('p', float)), True),
    'triangle_free': ((('n', int), ('p', float)), True),
    'paley': ((('q', int),), False),
    'polarity': ((('q', int),), False),
    'complete': ((('n', int),), False),
    'cycle': ((('n', int),), False),
    'petersen': ((), False),
}


def _convert(name, kind, token):
    try:
        return kind(token)
    except (TypeError, ValueError):
        raise GeneratorError(f"parameter {name} must be {kind.__name__}, got {token!r}") from None


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple
    seed: int = 0

    @classmethod
    def parse(cls, tokens, seed=0):
        """
        Parse a spec from tokens or a whitespace-separated string.

        Raises:
            GeneratorError: Unknown family or wrong parameters
        """
        if isinstance(tokens, str):
            tokens = tokens.split()
        tokens = list(tokens)
        if not tokens:
            raise GeneratorError("empty generator spec")
        family, rest = tokens[0], tokens[1:]
        if family == 'blowup':
            if len(rest) < 2:
                raise GeneratorError("blowup needs a factor and a base spec")
            factor = _convert('s', int, rest[0])
            base = cls.parse(rest[1:], seed)
            return cls('blowup', (factor, base), seed)
        if family not in FAMILIES:
            raise GeneratorError(f"unknown generator family {family!r}")
        signature, _ = FAMILIES[family]
        if len(rest) != len(signature):
            names = ' '.join(name for name, _ in signature)
            raise GeneratorError(f"{family} expects parameters: {names or '(none)'}")
        params = tuple(_convert(name, kind, token) for (name, kind), token in zip(signature, rest))
        return cls(family, params, seed)

    @property
    def label(self):
        if self.family == 'blowup':
            factor, base = self.params
            return f"blowup {factor} {base.label}"
        text = ' '.join([self.family, *(str(p) for p in self.params)])
        if FAMILIES[self.family][1]:
            text += f" seed={self.seed}"
        return text

    def build(self):
        if self.family == 'blowup':
            factor, base = self.params
            return families.blowup(base.build(), factor)
        builder = {
            'gnp': families.gnp,
            'bipartite_random': families.bipartite_random,
            'triangle_free': families.triangle_free_random,
            'paley': families.paley,
            'polarity': families.polarity,
            'complete': families.complete,
            'cycle': families.cycle,
            'petersen': families.petersen,
        }[self.family]
        if FAMILIES[self.family][1]:
            return builder(*self.params, self.seed)
        return builder(*self.params)
