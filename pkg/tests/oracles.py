"""Independent oracles for the test suite.

The word rewriter below normalizes products letter by letter (one adjacent
rewrite per step, no caching, no power bookkeeping) and is kept deliberately
separate from the package's straightening engine so the two can check each
other.
"""

from hopfsl2.algebra import Element, Monomial
from hopfsl2.cyclo import CycScalar


def word_of_monomial(mono: Monomial) -> str:
    out = []
    for letter, inv, e in (("a", "A", mono.i), ("b", "B", mono.j), ("c", "C", mono.k)):
        out.append((letter if e > 0 else inv) * abs(e))
    out.append("x" * mono.u)
    out.append("y" * mono.v)
    return "".join(out)


def slow_multiply(p, e1: Element, e2: Element) -> Element:
    """Normal-form product computed by single-step word rewriting."""
    words: dict[str, CycScalar] = {}
    for m1, c1 in e1.terms.items():
        for m2, c2 in e2.terms.items():
            w = word_of_monomial(m1) + word_of_monomial(m2)
            words[w] = words.get(w, p.zero) + c1 * c2
    words = _normalize_words(p, words)
    out = Element()
    for w, coeff in words.items():
        if coeff.is_zero():
            continue
        mono = _monomial_of_word(w)
        cur = out.terms.get(mono)
        s = coeff if cur is None else cur + coeff
        if s.is_zero():
            out.terms.pop(mono, None)
        else:
            out.terms[mono] = s
    return out


ORDER = {"a": 0, "A": 0, "b": 1, "B": 1, "c": 2, "C": 2, "x": 3, "y": 4}


def _normalize_words(p, words):
    n, n1 = p.n, p.n1
    q = p.q
    b1, b2, b3 = p.beta
    queue = dict(words)
    done: dict[str, CycScalar] = {}
    guard = 0
    while queue:
        guard += 1
        if guard > 2_000_000:
            raise RuntimeError("word rewriting did not terminate")
        w, coeff = queue.popitem()
        if coeff.is_zero():
            continue
        step = _one_step(p, w)
        if step is None:
            done[w] = done.get(w, p.zero) + coeff
            continue
        for w2, factor in step:
            queue[w2] = queue.get(w2, p.zero) + coeff * factor
    return done


def _one_step(p, w):
    """One rewrite of the leftmost reducible spot, or None if normal."""
    n, n1 = p.n, p.n1
    q = p.q
    b1, b2, b3 = p.beta
    # inverse-pair cancellation
    for pair in ("aA", "Aa", "bB", "Bb", "cC", "Cc"):
        idx = w.find(pair)
        if idx >= 0:
            return [(w[:idx] + w[idx + 2 :], p.one)]
    # power reduction x^n, y^n
    idx = w.find("x" * n)
    if idx >= 0:
        rest = w[:idx] + w[idx + n :]
        out = []
        if not b1.is_zero():
            out.append((w[:idx] + "a" * (n * n1) + w[idx + n :], b1))
            out.append((w[:idx] + "b" * n + w[idx + n :], -b1))
        return out or [(rest, p.zero)]
    idx = w.find("y" * n)
    if idx >= 0:
        out = []
        if not b2.is_zero():
            out.append((w[:idx] + "a" * (n * n1) + w[idx + n :], b2))
            out.append((w[:idx] + "c" * n + w[idx + n :], -b2))
        return out or [(w[:idx] + w[idx + n :], p.zero)]
    for i in range(len(w) - 1):
        l1, l2 = w[i], w[i + 1]
        if ORDER[l1] > ORDER[l2]:
            head, tail = w[:i], w[i + 2 :]
            swapped = head + l2 + l1 + tail
            if l1 == "x" and l2 in "aA":
                # xa = q ax, xA = q^-1 Ax
                return [(swapped, q if l2 == "a" else q.inv())]
            if l1 == "y" and l2 in "aA":
                return [(swapped, q.inv() if l2 == "a" else q)]
            if l1 == "y" and l2 == "x":
                out = [(swapped, q ** (-n1))]
                if not b3.is_zero():
                    out.append((head + "a" * (2 * n1) + tail, b3))
                    out.append((head + "bc" + tail, -b3))
                return out
            # all other out-of-order pairs commute on the nose
            return [(swapped, p.one)]
    return None


def _monomial_of_word(w) -> Monomial:
    i = w.count("a") - w.count("A")
    j = w.count("b") - w.count("B")
    k = w.count("c") - w.count("C")
    u = w.count("x")
    v = w.count("y")
    return Monomial(i, j, k, u, v)


def brute_tensor_square_of_x(p):
    """(x (x) a^n1 + b (x) x)^2 computed with two explicit tensor multiplies."""
    from hopfsl2.algebra import TensorElement

    dx = TensorElement(
        {
            (Monomial(0, 0, 0, 1, 0), Monomial(p.n1, 0, 0, 0, 0)): p.one,
            (Monomial(0, 1, 0, 0, 0), Monomial(0, 0, 0, 1, 0)): p.one,
        }
    )
    return p.tensor_mul(dx, dx)
