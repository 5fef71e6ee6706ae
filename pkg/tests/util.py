from sohyper.automata import LassoWord


def letter(text: str) -> frozenset:
    return frozenset(text.split())


def lasso(prefix, cycle) -> LassoWord:
    """Single-track lasso from lists of space separated proposition sets."""
    return LassoWord(tuple((letter(x),) for x in prefix), tuple((letter(x),) for x in cycle))


def lasso2(prefix, cycle) -> LassoWord:
    """Two-track lasso from lists of (set, set) string pairs."""
    def conv(part):
        return tuple(tuple(letter(x) for x in pair) for pair in part)

    return LassoWord(conv(prefix), conv(cycle))
