"""Naive boolean-list reference model for BitVector, shared by the unit
tests and the acceptance suite."""

import random

from swapmatch.bitvec import BitVector


class BoolModel:
    """Deliberately naive reference: a plain list of booleans."""

    def __init__(self, bits):
        self.bits = list(bits)

    @classmethod
    def zeros(cls, n):
        return cls([False] * n)

    def op_and(self, other):
        return BoolModel(a and b for a, b in zip(self.bits, other.bits))

    def op_or(self, other):
        return BoolModel(a or b for a, b in zip(self.bits, other.bits))

    def op_and_not(self, other):
        return BoolModel(a and not b for a, b in zip(self.bits, other.bits))

    def op_invert(self):
        return BoolModel(not a for a in self.bits)

    def op_shl1(self):
        return BoolModel([False] + self.bits[:-1])

    def set(self, i):
        self.bits[i] = True

    def test(self, i):
        return self.bits[i]

    def is_zero(self):
        return not any(self.bits)

    def indices(self):
        return [i for i, b in enumerate(self.bits) if b]


def random_pair(rnd, n):
    v = BitVector.zeros(n)
    model = BoolModel.zeros(n)
    for i in range(n):
        if rnd.random() < 0.4:
            v.set(i)
            model.set(i)
    return v, model


def run_model_comparison(seed: int, lengths, ops_per_length: int) -> int:
    """Drive random op sequences, checking BitVector against the model
    after every operation. Returns the number of operations executed."""
    rnd = random.Random(seed)
    executed = 0
    for n in lengths:
        pool = [random_pair(rnd, n) for _ in range(6)]
        for _ in range(ops_per_length):
            op = rnd.choice(("and", "or", "andnot", "invert", "shl1",
                             "set", "test", "zero"))
            v, mv = rnd.choice(pool)
            w, mw = rnd.choice(pool)
            if op == "and":
                pool.append((v & w, mv.op_and(mw)))
            elif op == "or":
                pool.append((v | w, mv.op_or(mw)))
            elif op == "andnot":
                pool.append((v.and_not(w), mv.op_and_not(mw)))
            elif op == "invert":
                pool.append((~v, mv.op_invert()))
            elif op == "shl1":
                pool.append((v.shl1(), mv.op_shl1()))
            elif op == "set":
                i = rnd.randrange(n)
                v.set(i)
                mv.set(i)
            elif op == "test":
                i = rnd.randrange(n)
                assert v.test(i) == mv.test(i)
            else:
                assert v.is_zero() == mv.is_zero()
            executed += 1
            latest_v, latest_m = pool[-1]
            assert latest_v.to_indices() == latest_m.indices(), \
                f"divergence at n={n} after {op}"
            if len(pool) > 12:
                del pool[0]
    return executed
