# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled valuation-enumeration kernel; mirrors ``_validity_py`` exactly.

Limits: at most 63 worlds, at most 512 program ops, at most 2**62 valuations.
The dispatching wrapper in ``kernels`` falls back to the pure-Python kernel
whenever an input exceeds these bounds.
"""

from libc.stdint cimport uint64_t


def find_countermodel(succ_masks, int n_worlds, int n_atoms, ops, args,
                      unsigned long long n_valuations):
    cdef uint64_t succ[64]
    cdef int prog_op[512]
    cdef long long prog_arg[512]
    cdef uint64_t stack[512]
    cdef int n_ops = len(ops)
    cdef int i, k, sp, world
    cdef uint64_t full, v, s, m, b, result, missing, bit

    if n_worlds > 63 or n_ops > 512:
        raise ValueError("input exceeds compiled kernel limits")

    for i in range(n_worlds):
        succ[i] = succ_masks[i]
    for k in range(n_ops):
        prog_op[k] = ops[k]
        prog_arg[k] = args[k]

    full = (<uint64_t>1 << n_worlds) - 1
    v = 0
    while v < n_valuations:
        sp = 0
        for k in range(n_ops):
            op = prog_op[k]
            if op == 0:  # TOP
                stack[sp] = full
                sp += 1
            elif op == 1:  # BOT
                stack[sp] = 0
                sp += 1
            elif op == 2:  # ATOM
                stack[sp] = (v >> (prog_arg[k] * n_worlds)) & full
                sp += 1
            elif op == 3:  # NOT
                stack[sp - 1] = (~stack[sp - 1]) & full
            elif op == 4:  # AND
                sp -= 1
                stack[sp - 1] = stack[sp - 1] & stack[sp]
            elif op == 5:  # OR
                sp -= 1
                stack[sp - 1] = stack[sp - 1] | stack[sp]
            elif op == 6:  # IMPLIES
                sp -= 1
                stack[sp - 1] = ((~stack[sp - 1]) & full) | stack[sp]
            elif op == 7:  # IFF
                sp -= 1
                stack[sp - 1] = (~(stack[sp - 1] ^ stack[sp])) & full
            elif op == 8:  # BOX
                s = stack[sp - 1]
                m = 0
                bit = 1
                for i in range(n_worlds):
                    if succ[i] & ~s == 0:
                        m |= bit
                    bit <<= 1
                stack[sp - 1] = m
            else:  # DIAMOND
                s = stack[sp - 1]
                m = 0
                bit = 1
                for i in range(n_worlds):
                    if succ[i] & s:
                        m |= bit
                    bit <<= 1
                stack[sp - 1] = m
        result = stack[sp - 1]
        if result != full:
            missing = (~result) & full
            world = 0
            while not missing & (<uint64_t>1 << world):
                world += 1
            return v, world
        v += 1
    return None
