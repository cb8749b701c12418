"""Pure-Python valuation-enumeration kernel.

Truth sets are bitmasks over the world indices; a valuation is one integer
whose bit ``atom_index * n_worlds + world_index`` says whether the atom holds
at the world.  Valuations are scanned in increasing order and the first
failing (valuation, world) pair is returned, which makes counter-models
deterministic and lets callers stop early.
"""

OP_TOP = 0
OP_BOT = 1
OP_ATOM = 2
OP_NOT = 3
OP_AND = 4
OP_OR = 5
OP_IMP = 6
OP_IFF = 7
OP_BOX = 8
OP_DIA = 9


def find_countermodel(succ_masks, n_worlds, n_atoms, ops, args, n_valuations):
    full = (1 << n_worlds) - 1
    n_ops = len(ops)
    for v in range(n_valuations):
        stack = []
        push = stack.append
        for k in range(n_ops):
            op = ops[k]
            if op == OP_TOP:
                push(full)
            elif op == OP_BOT:
                push(0)
            elif op == OP_ATOM:
                push((v >> (args[k] * n_worlds)) & full)
            elif op == OP_NOT:
                stack[-1] = ~stack[-1] & full
            elif op == OP_AND:
                b = stack.pop()
                stack[-1] &= b
            elif op == OP_OR:
                b = stack.pop()
                stack[-1] |= b
            elif op == OP_IMP:
                b = stack.pop()
                stack[-1] = (~stack[-1] & full) | b
            elif op == OP_IFF:
                b = stack.pop()
                stack[-1] = ~(stack[-1] ^ b) & full
            elif op == OP_BOX:
                s = stack[-1]
                miss = ~s
                m = 0
                bit = 1
                for i in range(n_worlds):
                    if not succ_masks[i] & miss:
                        m |= bit
                    bit <<= 1
                stack[-1] = m
            else:  # OP_DIA
                s = stack[-1]
                m = 0
                bit = 1
                for i in range(n_worlds):
                    if succ_masks[i] & s:
                        m |= bit
                    bit <<= 1
                stack[-1] = m
        result = stack[-1]
        if result != full:
            missing = ~result & full
            world = (missing & -missing).bit_length() - 1
            return v, world
    return None
