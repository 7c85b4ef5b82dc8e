"""Independent reference implementations used only by the tests."""

from fractions import Fraction
import math


def _grams(seq, n):
    out = {}
    for i in range(len(seq) - n + 1):
        g = tuple(seq[i:i + n])
        out[g] = out.get(g, 0) + 1
    return out


def bleu(cand, ref):
    """Textbook formula: BP * (prod p_n)^(1/N), precisions as exact fractions."""
    n_max = min(4, len(cand), len(ref))
    prod = Fraction(1)
    for n in range(1, n_max + 1):
        c, r = _grams(cand, n), _grams(ref, n)
        clipped = sum(min(k, r.get(g, 0)) for g, k in c.items())
        if clipped == 0:
            return 0.0
        prod *= Fraction(clipped, len(cand) - n + 1)
    bp = 1.0 if len(cand) >= len(ref) else math.exp(1 - len(ref) / len(cand))
    return bp * float(prod) ** (1.0 / n_max)


def sym(a, b):
    return (bleu(a, b) + bleu(b, a)) / 2


def brute_scores(seqs_by_id):
    """id -> (1 - best similarity, nearest id); ties go to the lowest id."""
    ids = sorted(seqs_by_id)
    out = {}
    for i in ids:
        best, arg = None, None
        for j in ids:
            if j == i:
                continue
            s = sym(seqs_by_id[i], seqs_by_id[j])
            if best is None or s > best:
                best, arg = s, j
        out[i] = (1.0, None) if best is None else (1.0 - best, arg)
    return out


def postfix_eval(steps, numbers):
    """Evaluate ``[(op, (a, b)), ...]`` by rewriting to postfix and running a stack machine."""
    def expand(ref):
        kind, k = ref
        if kind == "n":
            return [("push", Fraction(numbers[k]))]
        op, (a, b) = steps[k]
        return expand(a) + expand(b) + [("op", op)]

    stack = []
    for kind, v in expand(("#", len(steps) - 1)):
        if kind == "push":
            stack.append(v)
            continue
        y, x = stack.pop(), stack.pop()
        stack.append({"add": x + y, "subtract": x - y, "multiply": x * y}[v] if v != "divide" else x / y)
    assert len(stack) == 1
    return stack[0]
