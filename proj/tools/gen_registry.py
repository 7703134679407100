#!/usr/bin/env python3
"""Writes data/scenarios/*.json from the infix definitions below.

Constraints are Python expressions over the declared variables. They are
translated to the prefix trees read by the eliminator:
  comparisons (chains allowed), and/or/not, implies(p, q), divides(a, b),
  + - * / **, min, max, abs, integer literals.

Usage: tools/gen_registry.py [output_dir]
"""

import ast
import json
import sys
from pathlib import Path

CMP = {ast.Eq: "=", ast.NotEq: "!=", ast.Lt: "<", ast.LtE: "<=", ast.Gt: ">", ast.GtE: ">="}
BIN = {ast.Add: "+", ast.Sub: "-", ast.Mult: "*", ast.Div: "/"}


def expr(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        return node.id
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        inner = expr(node.operand)
        return -inner if isinstance(inner, int) else ["-", inner]
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError("exponent must be an integer literal")
            return ["^", expr(node.left), node.right.value]
        return [BIN[type(node.op)], expr(node.left), expr(node.right)]
    if isinstance(node, ast.Call) and node.func.id in ("min", "max", "abs"):
        return [node.func.id] + [expr(a) for a in node.args]
    raise ValueError("unsupported expression: " + ast.dump(node))


def cond(node):
    if isinstance(node, ast.Compare):
        parts = []
        left = node.left
        for op, right in zip(node.ops, node.comparators):
            parts.append([CMP[type(op)], expr(left), expr(right)])
            left = right
        return parts[0] if len(parts) == 1 else ["and"] + parts
    if isinstance(node, ast.BoolOp):
        return ["and" if isinstance(node.op, ast.And) else "or"] + [cond(v) for v in node.values]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
        return ["not", cond(node.operand)]
    if isinstance(node, ast.Call):
        name = node.func.id
        if name == "divides":
            return ["divides", expr(node.args[0]), expr(node.args[1])]
        if name == "implies":
            return ["implies", cond(node.args[0]), cond(node.args[1])]
        if name == "true":
            return ["true"]
    raise ValueError("unsupported constraint: " + ast.dump(node))


def V(name, lower, upper, fixed=False):
    v = {"name": name, "lower": lower, "upper": upper}
    if fixed:
        v["fixed"] = True
    return v


def S(name, section, quote, variables, constraints, kind, tuples=None, project=None, note=None):
    sc = {"name": name, "paperLocation": {"section": section, "quote": quote}}
    if note:
        sc["note"] = note
    sc["variables"] = variables
    sc["constraints"] = [cond(ast.parse(c, mode="eval").body) for c in constraints]
    ex = {"kind": kind}
    if project:
        ex["project"] = project
    if tuples:
        ex["tuples"] = tuples
    sc["expected"] = ex
    return sc


STAR = "n == 2 - eps + a - b"
STAR2 = "8 - eps + n <= 0"
STAR3 = "(a - 2)*(n + 2) == 2*eps - 6"


def prop_2_4():
    sec = "Prop 2.4"
    base = lambda e: [V("eps", e, e, True), V("a", 2, 200), V("n", -200, 200), V("b", 2, 200)]
    return [
        S("2.4-star-n-negative", sec, "$(\\star 2)$  $n+2<0$ if $\\varepsilon\\leq 2$.",
          [V("eps", 0, 2, True), V("n", -200, 200)], [STAR2, "n + 2 >= 0"], "Empty"),
        S("2.4-star-eps1", sec,
          "$(\\star 3)$ Suppose that $\\varepsilon=1$. We have $n+2=-1$ or -2 or -4, so $n=-3$ or -4 or -6. "
          "But $(\\ast \\ast)$ gives $n\\leq -7$.",
          base(1), [STAR, STAR2, STAR3], "Empty"),
        S("2.4-star-eps2", sec,
          "$(\\star 4)$ Suppose that $\\varepsilon=2$. From $(\\ast \\ast \\ast)$ we get $n+2=-1$ or -2. "
          "So $n=-3$ or -4. But $(*)$ gives $n\\leq -6.$",
          base(2), [STAR, STAR2, STAR3], "Empty"),
        S("2.4-star-eps3", sec,
          "$(\\star 5)$ Suppose that $\\varepsilon=3$. From $(\\ast \\ast)$ we obtain that $n\\leq -5$. "
          "From $(\\ast \\ast \\ast)$, $(a-2)(n+2)=0$. It follows that $a=2$.",
          base(3), [STAR, STAR2, STAR3], "ExactSet", [[2]], project=["a"]),
        S("2.4-star-eps0-twigs", sec,
          "By \\ref{sum ei}, $a=b=2$. From (ii) we get $n=-1$, i.e. $T_2^2=1$.",
          [V("a", 2, 200), V("b", 2, 200), V("n", -200, 200)],
          ["(a - 1)/a + (b - 1)/b <= 1", "a*n + 2*b == 2"], "ExactSet", [[2, 2, -1]],
          note="Two (-2)-twigs with determinants a and b have capacities (a-1)/a and (b-1)/b; "
               "their sum is bounded by 1 + eps with eps = 0."),
        S("2.4-genus-factorization", sec,
          "Now $p_a(E_0)=0$ implies $-2=(an+b)(2a-2)+a(n-2-an)$ and consequently $(a-1)(an+2b-2)=0$.",
          [V("a", -30, 30, True), V("b", -30, 30, True), V("n", -30, 30, True)],
          ["(2 + (a*n + b)*(2*a - 2) + a*(n - 2 - a*n) == 0 and (a - 1)*(a*n + 2*b - 2) != 0) or "
           "(2 + (a*n + b)*(2*a - 2) + a*(n - 2 - a*n) != 0 and (a - 1)*(a*n + 2*b - 2) == 0)"],
          "Empty", note="The two vanishing conditions agree on the whole box."),
        S("2.4-ii-b0", sec, "Suppose that $b=0$. Then $2=an$, so $a=2$ and $n=1$.",
          [V("a", 2, 200), V("b", 0, 0, True), V("n", -200, 200)], ["a*n + 2*b == 2"],
          "ExactSet", [[2, 0, 1]]),
        S("2.4-ii-b1", sec, "Suppose that $b=1$. Then $an=0$, hence $n=0$",
          [V("a", 2, 200), V("b", 1, 1, True), V("n", -200, 200)], ["a*n + 2*b == 2"],
          "ExactSet", [[0]], project=["n"]),
        S("2.4-qE0-b2", sec, "Suppose that $b=2$. Then $na=-2$, hence $a=2$ and $n=-1$, i.e., $T_2^2=1$.",
          [V("a", 2, 200), V("b", 2, 2, True), V("n", -200, 200)], ["a*n + 2*b == 2"],
          "ExactSet", [[2, -1]], project=["a", "n"]),
        S("2.4-qE0-eps0", sec,
          "From $(***)$ we get that $n+2$ divides -6. From $(**)$, $n\\leq -8$. It follows that $n=-8$, $a=3$. "
          "It follows further that $b=13$.",
          base(0), [STAR, STAR2, STAR3, "divides(n + 2, -6)", "n <= -8", "a*n + 2*b == 2"],
          "ExactSet", [[0, 3, -8, 13]]),
        S("2.4-qE0-eps3", sec,
          "If $\\varepsilon =3$ we get, as above, that $a=2$, but we we already proved that $a\\geq 3.$",
          [V("eps", 3, 3, True), V("a", 3, 200), V("n", -200, 200), V("b", 2, 200)],
          [STAR, STAR2, STAR3], "Empty"),
    ]


def lemma_3_4():
    sec = "Lemma 3.4"
    return [
        S("3.4-alpha-ge-3", sec,
          "We get that $ d+p_1+\\tilde p_1<\\gamma\\leq 9$. Thus $d<9-p_1-\\tilde p_1\\leq 7$. "
          "But $d=c_1+\\tilde c_1\\geq 2(\\alpha+1)\\geq 8$, a contradiction.",
          [V("gamma", 1, 9, True), V("d", 8, 200), V("p1", 1, 200), V("pt1", 1, 200)],
          ["3*d < 2*d + gamma - p1 - pt1"], "Empty",
          note="3d < P + P~ with P + P~ = 2d + gamma - p1 - p~1 substituted. d >= 8 because alpha >= 3."),
        S("3.4-l-odd", sec,
          "From this $l(c_2+\\tilde c_2)<\\gamma$. Thus $l(c_2+\\tilde c_2)\\leq 8$, which implies $l\\leq 4$. "
          "Hence $l \\leq 3$.",
          [V("gamma", 1, 9, True), V("l", 1, 200), V("s", 2, 200)],
          ["divides(2, l - 1)", "s*(l*s - gamma) + gamma <= 0"], "ExactSet", [[1]], project=["l"],
          note="s = c2 + c~2 >= 2; l is odd since k = l + 2 and gcd(k, l) = 1."),
        S("3.4-l3", sec,
          "Suppose that $l=3$. Then $c_2+\\tilde c_2=2$ and we have $2(6-\\gamma)+\\gamma\\leq 0$ "
          "which gives $\\gamma\\geq 12$, a contradiction.",
          [V("gamma", 1, 9, True), V("s", 2, 200)], ["s*(3*s - gamma) + gamma <= 0"], "Empty"),
        S("3.4-l1-sum-bound", sec,
          "This implies that $$c_2+\\tilde c_2=p_1+\\tilde p_1\\leq \\gamma-2.$$",
          [V("gamma", 1, 9, True), V("s", 2, 200)], ["s*(s - gamma) + gamma <= 0", "s > gamma - 2"],
          "Empty"),
        S("3.4-l1-factorization", sec,
          "By simple algebra we get $(c_2+\\tilde c_2-1)(c_2+\\tilde c_2+1-\\gamma)\\leq -1$.",
          [V("gamma", 1, 9, True), V("s", 2, 200)],
          ["(s*(s - gamma) + gamma <= 0 and (s - 1)*(s + 1 - gamma) > -1) or "
           "(s*(s - gamma) + gamma > 0 and (s - 1)*(s + 1 - gamma) <= -1)"], "Empty"),
        S("3.4-gamma7", sec, "If $\\gamma=7$, then $\\epsilon=1$ and  $t=2$",
          [V("gamma", 7, 9, True), V("eps", 1, 3, True), V("t", 0, 2, True)],
          ["gamma <= 7 + t - 2*eps"], "ExactSet", [[7, 1, 2]],
          note="gamma >= 7 with eps >= 1 under the bound 7 + t >= 2 eps + gamma."),
        S("3.4-c2-ct2-2-next-pair", sec,
          "It follows that $t=0$ and and $(***)$ gives $\\gamma\\leq 5$. We reach a contradiction with $(**)$.",
          [V("gamma", 1, 9, True), V("eps", 1, 3, True), V("t", 0, 0, True)],
          ["gamma <= 7 + t - 2*eps", "2 + 2 <= gamma - 2"], "Empty"),
        S("3.4-c2-ct2-2-divisible", sec,
          "Hence $\\gamma$ is divisible by $4$, so $\\gamma=4$, and we have a contradiction with $(**)$.",
          [V("gamma", 1, 6, True)], ["divides(4, gamma)", "2 + 2 <= gamma - 2"], "Empty",
          note="gamma <= 6 was established before this case."),
        S("3.4-ct2-3", sec,
          "(1) and (2) now give $ 6+24= s+1+3(s+b)+1$, i.e., $28=4s+3b$ and $6+144=48+(s-1)16+9b+10$, "
          "i.e., $108=16s+9b$. The system of equations has no integer solutions.",
          [V("s", 0, 100), V("b", 0, 100)],
          ["6 + 24 == s + 1 + 3*(s + b) + 1", "6 + 144 == 48 + 16*(s - 1) + 9*b + 10"], "Empty"),
        S("3.4-ct2-2", sec,
          "We find two solutions: (i) $\\gamma=5, s=7, b=0, \\tilde p_{s+1}=1$ "
          "(ii) $\\gamma=6, s=6, b=2, \\tilde p_{s+1}=2.$",
          [V("gamma", 5, 6, True), V("s", 0, 100), V("b", 0, 100), V("p", 1, 2, True)],
          ["gamma + 16 == 3*s + 2*b", "gamma + 60 == 9*s + 4*b + 2*p"], "ExactSet",
          [[5, 7, 0, 1], [6, 6, 2, 2]]),
        S("3.4-ct2-1", sec,
          "The formulas give $\\gamma+10=2s+b$ and $\\gamma+24=4s+b$. We get the solution (iii) $\\gamma=4, s=7$.",
          [V("gamma", 1, 6, True), V("s", 0, 100), V("b", 0, 100)],
          ["gamma + 10 == 2*s + b", "gamma + 24 == 4*s + b"], "Contains", [[4, 7, 0]],
          note="The displayed system also has (5,7,1) and (6,7,2); the text names only (4,7,0)."),
    ]


STARSTAR_36 = "c2*ct2*(2*l + r + rt) < (gamma - 2)*(c2 + ct2)"


def section_3_6():
    sec = "3.6"
    q_ss = "$$c_2\\ti c_2(2l+r+\\ti r)<(\\gamma-2)(c_2+\\ti c_2).\\leqno (**)$$"
    return [
        S("3.6-l-ge-3-twigs", sec,
          q_ss + " Suppose that $l\\geq 3$. Then $6c_2\\ti c_2<7(c_2+\\ti c_2)$. This implies $c_2=\\ti c_2=2$.",
          [V("gamma", 1, 9, True), V("l", 3, 10), V("r", 0, 9), V("rt", 0, 9), V("c2", 2, 50), V("ct2", 2, 50)],
          ["r <= l - 1", "rt <= l - 1", STARSTAR_36], "ExactSet", [[2, 2]], project=["c2", "ct2"],
          note="r, r~ <= l - 1 and c2, c~2 > 1 by 3.5.1."),
        S("3.6-l-ge-3-eps-positive", sec,
          "But then $\\varepsilon>0$ by 3.6.1. This implies $\\gamma\\leq 7$ by \\ref{bound}. "
          "Now $(**)$ gives $24<20$, a contradiction.",
          [V("gamma", 1, 7, True), V("l", 3, 10), V("r", 0, 9), V("rt", 0, 9),
           V("c2", 2, 2, True), V("ct2", 2, 2, True)],
          ["r <= l - 1", "rt <= l - 1", STARSTAR_36], "Empty"),
        S("3.6-l2-c2-ge-3", sec,
          "Suppose that $c_2\\geq 3$. Since $\\gamma\\leq 8$, $(**)$ gives  $c_2(4\\ti c_2-6)<6\\ti c_2$ and "
          "$3(4\\ti c_2-6)<6\\ti c_2$. We get $\\ti c_2<3$, a contradiction.",
          [V("gamma", 1, 8, True), V("l", 2, 2, True), V("r", 0, 1, True), V("rt", 0, 1, True),
           V("c2", 3, 200), V("ct2", 3, 200)],
          ["c2 <= ct2", STARSTAR_36], "Empty"),
        S("3.6-l2-c2-2", sec,
          "Suppose that $c_2=2$. We obtain that $8\\ti c_2<6(2+\\ti c_2)$, i.e., $\\ti c_2<6$.",
          [V("gamma", 1, 8, True), V("l", 2, 2, True), V("r", 0, 1, True), V("rt", 0, 1, True),
           V("c2", 2, 2, True), V("ct2", 2, 200)],
          [STARSTAR_36], "ExactSet", [[2], [3], [4], [5]], project=["ct2"]),
        S("3.6-l2-c2-2-eps-positive", sec,
          "Now $(**)$ gives $8\\ti c_2<5(2+\\tilde c_2)$, i.e., $\\ti c_2\\leq 3$.",
          [V("gamma", 1, 7, True), V("l", 2, 2, True), V("r", 0, 1, True), V("rt", 0, 1, True),
           V("c2", 2, 2, True), V("ct2", 2, 200)],
          [STARSTAR_36], "ExactSet", [[2], [3]], project=["ct2"]),
        S("3.6-l2-ct2-2-even", sec,
          "If $\\ti c_2=2$, then $\\gamma$ is even by 3.2(a), so $\\gamma\\leq 6$ and $(**)$ gives a contradiction.",
          [V("gamma", 1, 7, True), V("l", 2, 2, True), V("r", 0, 1, True), V("rt", 0, 1, True),
           V("c2", 2, 2, True), V("ct2", 2, 2, True)],
          ["divides(2, gamma)", STARSTAR_36], "Empty"),
        S("3.6-l2-ct2-3-pairs", sec, "So $\\ti c_2=3$. From $(**)$ we obtain $r=\\ti r=0$.",
          [V("gamma", 1, 7, True), V("l", 2, 2, True), V("r", 0, 1, True), V("rt", 0, 1, True),
           V("c2", 2, 2, True), V("ct2", 3, 3, True)],
          [STARSTAR_36], "ExactSet", [[0, 0]], project=["r", "rt"]),
        S("3.6-l2-ct2-3-star", sec,
          "Now $(*)$ gives $16<\\ti P'$, a contradiction since $\\ti P'=1$ or 2.",
          [V("gamma", 1, 7, True), V("l", 2, 2, True), V("c2", 2, 2, True), V("ct2", 3, 3, True),
           V("r", 0, 0, True), V("rt", 0, 0, True), V("p1", 0, 100), V("pt1", 0, 100),
           V("Pp", 1, 1, True), V("pr2", 1, 1, True), V("Pt", 1, 2, True), V("ptr2", 1, 2, True)],
          ["p1 == l*c2", "pt1 == l*ct2", "ptr2 == Pt",
           "(c2 + ct2)*(p1 + pt1 + r*c2 + rt*ct2) + c2*Pt + ct2*Pp - gamma*(c2 + ct2) < "
           "2*r*c2**2 + 2*rt*ct2**2 + c2*pr2 + ct2*ptr2"], "Empty",
          note="Pp = P' = 1 and P~' = p~_{r~+2}."),
        S("3.6-l1-eq5", sec,
          "Since $h\\leq 10$ we get $7\\geq k(\\mu +k)\\geq (\\mu+1)(2\\mu+1)$. We obtain $\\mu=1$ and $k=2$",
          [V("h", 2, 10, True), V("k", 2, 200), V("mu", 1, 200)],
          ["h - 2 - mu*k - k**2 > 0"], "ExactSet", [[1, 2]], project=["mu", "k"]),
        S("3.6-l1-tilde-side", sec,
          "We find $\\ti h-2-\\ti \\mu\\ti k-5\\ti k^2\\leq \\ti h-24<0$ since $\\ti h\\leq 10$.",
          [V("ht", 2, 10, True), V("kt", 2, 200), V("mut", 1, 200)],
          ["ht - 2 - mut*kt - 5*kt**2 >= 0"], "Empty"),
        S("3.6-claim", sec,
          "Claim. $\\gamma+\\varepsilon\\leq 7$. Suppose otherwise. Then $\\varepsilon \\geq 2$ is ruled out by 2.5, "
          "$\\varepsilon =0$ by $(***)$ and 1.10. Hence $\\gamma=7, \\varepsilon=1$. By 2.5, $t=2$.",
          [V("gamma", 1, 8, True), V("eps", 1, 3, True), V("t", 0, 2, True)],
          ["gamma + eps >= 8", "7 + t >= 2*eps + gamma"], "ExactSet", [[7, 1, 2]],
          note="gamma = 9 was excluded earlier in the section; eps >= 1 by (***)."),
        S("3.6-h-count", sec,
          "Since $\\gamma+\\varepsilon\\leq 7$, $h+\\ti h\\leq 11$. So $h\\leq 9$. (5) gives $h>8$. "
          "Hence $h=9$ and $\\ti h=2$. Also $\\gamma+\\varepsilon=7$.",
          [V("gamma", 1, 8, True), V("eps", 0, 3, True), V("h", 2, 10, True), V("ht", 2, 10, True)],
          ["gamma + eps <= 7", "h + ht == 4 + eps + gamma", "h - 2 - 1*2 - 2**2 > 0"],
          "ExactSet", [[9, 2]], project=["h", "ht"], note="(5) with mu = 1, k = 2."),
        S("3.6-h9-eps", sec,
          "If $\\varepsilon=2$, then $\\gamma=5$, so $t=2$ by \\ref{bound}, but $p_h =p_9>1$ implies $t\\leq 1$. "
          "Hence $\\varepsilon=1$ and $\\gamma=6$. By \\ref{bound} $t\\geq 1$.",
          [V("gamma", 1, 8, True), V("eps", 1, 3, True), V("t", 0, 1, True)],
          ["gamma + eps == 7", "7 + t >= 2*eps + gamma"], "ExactSet", [[6, 1, 1]]),
        S("3.6-h9-endgame", sec,
          "From (6) we get $$5+3\\ti c_2=c_3+p_9.$$ From (8) we get "
          "$$6+2\\ti c_2^2+8c_3\\ti c_2\\leq p_9c_3+\\ti c_2.\\leqno(9)$$",
          [V("ct2", 2, 200), V("c3", 1, 200), V("p9", 2, 400)],
          ["5 + 3*ct2 == c3 + p9", "6 + 2*ct2**2 + 8*c3*ct2 <= p9*c3 + ct2"], "Empty"),
        S("3.6-final-c3", sec, "It follows that $6+c_3^2<5c_3$. This gives $2<c_3<3$, a contradiction.",
          [V("c", 1, 100)], ["6 + c**2 < 5*c"], "Empty"),
    ]


def section_4_early():
    out = []
    out += [
        S("4.4-gamma9", "Lemma 4.4", "Suppose that $\\gamma=9$. By \\ref{bound}, $\\varepsilon=0$ and $t=2$.",
          [V("gamma", 9, 9, True), V("eps", 0, 3, True), V("t", 0, 2, True)],
          ["7 + t >= 2*eps + gamma"], "ExactSet", [[9, 0, 2]]),
        S("4.4-tip-pattern-i", "Lemma 4.4",
          "We find  $p_1=1, c_1=3$ in the first case ... and we reach contradiction with \\ref{ti r}(a).",
          [V("p1", 1, 1, True), V("c1", 3, 3, True)], ["c1 - p1 >= 3"], "Empty"),
        S("4.4-tip-pattern-ii", "Lemma 4.4",
          "$p_1=2l+3, c_1=2l+5$ in the second and we reach contradiction with \\ref{ti r}(a).",
          [V("l", 0, 200), V("p1", 1, 500), V("c1", 1, 500)],
          ["p1 == 2*l + 3", "c1 == 2*l + 5", "c1 - p1 >= 3"], "Empty"),
    ]
    sec = "Lemma 4.5"
    out += [
        S("4.5-alpha-ge-3", sec,
          "Suppose that $\\alpha\\geq 3$ Then $k=\\alpha+l\\geq 4$. We obtain $\\gamma-6\\geq c_2(2k-3)\\geq 5c_2$, "
          "a contradiction since $\\gamma\\leq 8.$",
          [V("gamma", 1, 8, True), V("alpha", 3, 200), V("l", 1, 200), V("k", 1, 400), V("c2", 1, 200)],
          ["k == alpha + l", "gamma - 2*alpha >= c2*(k*alpha - alpha - k)"], "Empty"),
        S("4.5-gamma-gt-4", sec, "since $\\gamma>2\\alpha=4$ by (6)",
          [V("gamma", 1, 8, True), V("k", 3, 200), V("c2", 1, 200)],
          ["gamma - 2*2 >= c2*(k*2 - 2 - k)"], "ExactSet", [[5], [6], [7], [8]], project=["gamma"]),
        S("4.5-quadratic", sec,
          "We  multiply (3) by $c_2$ and subtract (4). We get "
          "$$c_2(1+\\gamma) +c_2c_1+\\alpha c_2^2\\geq \\gamma+\\alpha c_1c_2+2\\alpha c_2.\\leqno (5)$$",
          [V("gamma", 1, 8, True), V("k", 3, 200), V("c2", 1, 200), V("c1", 1, 40000)],
          ["c1 == k*c2", "c2*(1 + gamma) + c2*c1 + 2*c2**2 >= gamma + 2*c1*c2 + 2*2*c2"], "Empty",
          note="alpha = 2 and c1 = k c2. Equivalent to (k-2)c2^2 + (3-gamma)c2 + gamma <= 0."),
        S("4.5-discriminant", sec,
          "Since $k\\geq\\alpha+1=3$ we have $(3-\\gamma)^2-4\\gamma\\geq 0$  and finally "
          "$\\gamma^2-10\\gamma+9\\geq 0$. From this, since $\\gamma>2\\alpha=4$ by (6), we obtain $\\gamma\\geq 9$, "
          "a contradiction",
          [V("gamma", 5, 8, True), V("k", 3, 200)],
          ["(3 - gamma)**2 - 4*gamma*(k - 2) >= 0"], "Empty",
          note="Real roots of (k-2)x^2 + (3-gamma)x + gamma are needed for (5) to hold at x = c2, so the "
               "discriminant is nonnegative. The printed text has the opposite inequality sign."),
    ]
    sec = "Lemma 4.6"
    out += [
        S("4.6-coefficient", sec,
          "Now $-2k+k^2+l-kl=(k-l)(k-2)-l\\geq 2(k-2)-l=k+k-l-4\\geq k-2\\geq 1.$",
          [V("l", 1, 200), V("k", 1, 200)], ["k >= l + 2", "k**2 - 2*k + l - k*l < k - 2"], "Empty"),
        S("4.6-ct1", sec,
          "$$ \\gamma>\\ti c_1(k^2-kl-l-1)=\\ti c_1(k+1)(k-l-1)\\geq 4\\ti c_1.$$ "
          "Now $\\gamma\\leq 8$ by \\ref{gamma<9}, hence $\\ti c_1<2$",
          [V("gamma", 1, 8, True), V("ct1", 1, 200), V("k", 3, 200), V("l", 1, 200)],
          ["k - l >= 2", "gamma > ct1*(k + 1)*(k - l - 1)"], "ExactSet", [[1]], project=["ct1"]),
        S("4.7-beta", "Lemma 4.7",
          "we find $\\gamma(\\ti c_1-1)\\geq \\beta (c_1+\\ti c_1) \\geq \\beta (2\\ti c_1 +3)$. "
          "In view of 4.6 this gives $\\beta < \\frac{\\gamma}{2}\\leq 4$.",
          [V("gamma", 1, 8, True), V("ct1", 2, 200), V("beta", 2, 200)],
          ["gamma*(ct1 - 1) >= beta*(2*ct1 + 3)"], "ExactSet", [[2], [3]], project=["beta"]),
    ]
    return out


STARSTAR_412 = ("gamma*ct1 - gamma >= beta*(pt1 - beta + rt*(ct1 - 1) - ct1) + p2*(ct1 - c2)")


def lemma_4_12():
    sec = "Lemma 4.12"
    return [
        S("4.12-beta3-ct1", sec,
          "We obtain $17\\geq 5\\ti c_1+3\\ti p_1$. This implies $\\ti c_1=2$, $\\ti p_1=1$, $\\ti h=1$.",
          [V("gamma", 7, 8, True), V("ct1", 2, 200), V("pt1", 1, 200)],
          ["pt1 < ct1", "2*gamma + 3 >= ct1*(2*gamma - 9) + 3*pt1"], "ExactSet", [[2, 1]],
          project=["ct1", "pt1"]),
        S("4.12-beta3-h", sec,
          "By  4.11, $ 1+h+\\gamma-1\\geq 2+\\varepsilon+\\gamma$ hence $h\\geq 2+\\varepsilon$. "
          "Thi gives $\\varepsilon=0$, $h=2$.",
          [V("gamma", 7, 8, True), V("eps", 0, 3, True), V("h", 1, 2, True)],
          ["1 + h + gamma - 1 >= 2 + eps + gamma"], "ExactSet", [[0, 2]], project=["eps", "h"]),
        S("4.12-beta2-star3", sec,
          "$$\\gamma+2\\geq 2\\ti p_1+(\\gamma-4)\\ti c_1.\\leqno{(***)}$$ Since $\\gamma\\geq 5$ we get "
          "$7\\geq 2\\ti p_1+\\ti c_1$. This implies $\\ti p_1=1$ or $\\ti p_1=2$ and $\\ti c_1=3$.",
          [V("gamma", 5, 8, True), V("ct1", 2, 200), V("pt1", 1, 200)],
          ["pt1 < ct1", "gamma + 2 >= 2*pt1 + (gamma - 4)*ct1"], "ExactSet",
          [[2, 1], [3, 1], [3, 2], [4, 1], [5, 1]], project=["ct1", "pt1"]),
        S("4.12-2.1.1", sec,
          "For $\\gamma=5$ we get $\\ti c_1=2$, $\\ti c_1-c_2=1$ and hence $c_2=1$. But then $h=1$.",
          [V("gamma", 5, 8, True), V("pt1", 1, 1, True), V("p2", 1, 1, True), V("ct1", 2, 200),
           V("c2", 1, 200)],
          ["c2 < ct1", "gamma + 4 >= (gamma - 2)*ct1 + 2*pt1 + p2*(ct1 - c2)"], "ExactSet", [[5, 2, 1]],
          project=["gamma", "ct1", "c2"], note="c2 < c~1 by 4.6."),
        S("4.12-2.1.2", sec,
          "Then $\\gamma=5$ by $(***)$. Now $(**)$ gives $15\\geq 4\\ti r$, but $\\ti r\\geq \\gamma-1=4$, "
          "a contradiction.",
          [V("gamma", 5, 8, True), V("beta", 2, 2, True), V("ct1", 3, 3, True), V("pt1", 2, 2, True),
           V("p2", 1, 1, True), V("c2", 1, 200), V("rt", 0, 200)],
          ["gamma + 2 >= 2*pt1 + (gamma - 4)*ct1", "c2 < ct1", "rt >= gamma - 1", STARSTAR_412], "Empty"),
        S("4.12-2.1.3-omega", sec,
          "$(**)$ gives $\\gamma+6\\geq 2\\ti p_1+\\gamma\\ti c_1$ and further $11\\geq 2\\ti p_1+5\\ti c_1$; "
          "a contradiction.",
          [V("gamma", 5, 8, True), V("ct1", 2, 200), V("pt1", 1, 200)],
          ["pt1 < ct1", "gamma + 6 >= 2*pt1 + gamma*ct1"], "Empty"),
        S("4.12-2.1.3-final", sec,
          "We substitute it to the first equality and get $$\\gamma=p_1+\\ti p_1+\\ti c_1+\\gamma,$$ "
          "a contradiction.",
          [V("gamma", 5, 8, True), V("ct1", 2, 200), V("c1", 1, 800), V("p1", 1, 200), V("pt1", 1, 200)],
          ["gamma*(ct1 - 1) == 2*(c1 + ct1)", "gamma + 2*c1 + ct1 == p1 + pt1 + gamma*ct1"], "Empty"),
        S("4.12-2.2", sec,
          "From 4.11 we obtain $\\gamma-2+h+\\ti h\\geq 2+\\varepsilon +\\gamma+\\varepsilon$, i.e., "
          "$h+\\ti h\\geq 4+\\varepsilon+\\omega.$ It gives $h=\\ti h=2$ and $\\varepsilon =0$.",
          [V("gamma", 5, 8, True), V("h", 1, 2, True), V("ht", 1, 2, True), V("eps", 0, 3, True),
           V("rt", 3, 200), V("omega", 0, 200)],
          ["rt + h + ht == 2 + eps + gamma + omega", "rt <= gamma - 2"], "ExactSet", [[2, 2, 0, 0]],
          project=["h", "ht", "eps", "omega"],
          note="Uses 4.11 as r~ + h + h~ = 2 + eps + gamma + omega; the displayed middle step writes eps twice."),
    ]


BMY_413 = "1 <= 1/dt + 1/d1 + 1/gamma + 1/d0"


def section_4_13_on():
    sec = "Lemma 4.13"
    out = [
        S("4.13-dQ0", sec,
          "We obtain $d(Q_0)\\geq 4(2n-\\ti n)=4(n+n-\\ti n)\\geq 4(3+2)=20.$",
          [V("n", 3, 200), V("b", 3, 200), V("nt", 1, 200)],
          ["n - nt >= 2", "4*(n*(b - 1) - nt) < 20"], "Empty",
          note="d(Q0) = 4(n(b-1) - n~) for a (2,2,n)-fork; b >= 3, n >= 3 because H^2 <= -3."),
        S("4.13-bmy-dQt1", sec, "This implies $d(\\ti Q_1)=2$.",
          [V("dt", 2, 60), V("gamma", 6, 8, True), V("d1", 3, 60), V("d0", 20, 60)],
          [BMY_413], "ExactSet", [[2]], project=["dt"]),
        S("4.13-bmy-c2", sec,
          "$(*)$ gives $1\\leq\\frac{1}{2}+\\frac{1}{d(Q_1)}+\\frac{1}{6}+\\frac{1}{20}$, which implies "
          "$d(Q_1)\\leq 3$. Since $d(Q_1)=c_2\\geq 3$ we get $c_2=3$.",
          [V("dt", 2, 2, True), V("gamma", 6, 7, True), V("d1", 3, 60), V("d0", 20, 60)],
          [BMY_413], "ExactSet", [[3]], project=["d1"]),
        S("4.13-omega0", sec,
          "This implies $\\gamma\\leq 6$, so $\\gamma=6$. Also $\\ti c_1=4$ and $\\ti p_1=2$, $\\ti r=5$.",
          [V("gamma", 6, 7, True), V("ct1", 4, 200), V("pt1", 2, 200), V("rt", 0, 200)],
          ["pt1 < ct1", "gamma + 12 == pt1 + (gamma - 2)*ct1", "rt == gamma - 1"], "ExactSet",
          [[6, 4, 2, 5]]),
        S("4.13-omega0-contradiction", sec,
          "From \\ref{formulas}(3) we obtain $6(4-1)=13\\cdot 2+2(\\ti c_1-3)+\\ti c_1-2$, a contradiction.",
          [V("gamma", 6, 7, True), V("ct1", 4, 200), V("pt1", 2, 200), V("rt", 0, 200)],
          ["pt1 < ct1", "gamma + 12 == pt1 + (gamma - 2)*ct1", "rt == gamma - 1",
           "gamma*(ct1 - 1) == 13*2 + 2*(ct1 - 3) + ct1 - 2"], "Empty"),
        S("4.13-omega-pos-beta3", sec,
          "If $\\beta=3$ then $2\\gamma+8\\geq 3\\ti p_1+2\\gamma\\ti c_1$. ... In both cases we get "
          "contradiction since $\\gamma=6$ or $7$ and $\\ti c_1\\geq 4.$",
          [V("gamma", 6, 7, True), V("ct1", 4, 200), V("pt1", 1, 200)],
          ["2*gamma + 8 >= 3*pt1 + 2*gamma*ct1"], "Empty"),
        S("4.13-omega-pos-beta2", sec,
          "If $\\beta =2$, then $\\gamma+6\\geq 2\\ti p_1+(\\gamma+1)\\ti c_1$. In both cases we get "
          "contradiction since $\\gamma=6$ or $7$ and $\\ti c_1\\geq 4.$",
          [V("gamma", 6, 7, True), V("ct1", 4, 200), V("pt1", 1, 200)],
          ["gamma + 6 >= 2*pt1 + (gamma + 1)*ct1"], "Empty"),
        S("4.13-Tt1-h1", sec,
          "Suppose that $h=1$. Then $5\\gamma=(c_1+6)\\beta+6$. ... But $c_1=p+1+\\ti c_1+\\beta>\\ti c_1$. "
          "We reach a contradiction.",
          [V("gamma", 6, 7, True), V("beta", 2, 3, True), V("c1", 7, 200)],
          ["5*gamma == (c1 + 6)*beta + 6"], "Empty", note="c1 > c~1 = 6."),
        S("4.13-Tt1-h2", sec,
          "We get $5\\gamma=(c_1+6)\\beta+2(\\ti c_1-\\ti c_2)+\\ti c_1-2=(c_1+6)\\beta+10.$  Since "
          "$\\gamma\\leq 7$, we have $35\\geq2c_1+12+10$  and again $c_1\\leq 6$, a contradiction.",
          [V("gamma", 6, 7, True), V("beta", 2, 3, True), V("c1", 7, 200)],
          ["5*gamma == (c1 + 6)*beta + 10"], "Empty"),
    ]
    sec = "Prop 4.14"
    out += [
        S("4.14-enumeration", sec,
          "By \\ref{BMY} we have $\\frac{1}{d(Q_1)}+\\frac{1}{d(\\ti Q_1)}+\\frac{1}{\\gamma}\\geq 1$. Since "
          "$\\gamma\\geq 6$ we have (i) $d(Q_1)=d(\\ti Q_1)=2$ or (ii) $\\{d(Q_1), d(\\ti Q_1)\\}=\\{2,3\\}$, $\\gamma=6$.",
          [V("gamma", 6, 8, True), V("d1", 2, 200), V("d2", 2, 200)],
          ["1/d1 + 1/d2 + 1/gamma >= 1"], "ExactSet",
          [[6, 2, 2], [6, 2, 3], [6, 3, 2], [7, 2, 2], [8, 2, 2]],
          note="gamma <= 8 by Lemma 4.4."),
        S("4.14-i-divisible", sec, "By \\ref{formulas}(2), $4$ divides $\\gamma$. Hence $\\gamma=8$.",
          [V("gamma", 6, 8, True)], ["divides(4, gamma)"], "ExactSet", [[8]]),
        S("4.14-b-bark", sec,
          "$-4-\\varepsilon=(\\ks+Q)^2=(\\Bk Q)^2=-2-\\frac{4}{\\gamma}+ B_0$ ... which gives $\\varepsilon=2$, "
          "a contradiction",
          [V("gamma", 6, 8, True), V("s", 0, 1, True), V("eps", -200, 200)],
          ["-4 - eps == -2 - 4/gamma + (-4 + 2*s/3)"], "ExactSet", [[6, 1, 2]],
          note="s selects B0: s = 0 gives -4, s = 1 gives -10/3."),
        S("4.14-c-fork-types", sec, "$Q_0$ is of the type (3,3,3), (2,4,4) or (2,3,6).",
          [V("d1", 2, 200), V("d2", 2, 200), V("d3", 2, 200)],
          ["d1 <= d2", "d2 <= d3", "1/d1 + 1/d2 + 1/d3 == 1"], "ExactSet",
          [[2, 3, 6], [2, 4, 4], [3, 3, 3]]),
    ]
    sec = "Lemma 4.15"
    out += [
        S("4.15-pairs", sec,
          "By 4.14, $\\gamma\\leq 5$, so $4\\geq \\ti c_1+p_1+\\ti p_1$. In view of \\ref{not simple} we get "
          "$\\ti c_1=2, \\ti p_1=1$ and $p_1=1$.",
          [V("ct1", 2, 200), V("p1", 1, 200), V("pt1", 1, 200)],
          ["pt1 < ct1", "4 >= ct1 + p1 + pt1"], "ExactSet", [[2, 1, 1]]),
        S("4.15-c1", sec,
          "\\ref{formulas}(3) gives $5\\geq \\gamma=(c_1+2)\\beta$. It follows that $c_1=0$, a contradiction.",
          [V("gamma", 1, 5, True), V("beta", 2, 3, True), V("c1", 0, 200)],
          ["gamma == (c1 + 2)*beta"], "ExactSet", [[0]], project=["c1"]),
    ]
    sec = "Theorem 4.16"
    out += [
        S("4.16-rt0", sec,
          "we obtain $\\gamma(\\ti c_2-1)\\geq 2\\cdot 4\\ti c_2$. It follows that $\\gamma=9$, a contradiction.",
          [V("gamma", 1, 9, True), V("ct2", 1, 200)],
          ["gamma*(ct2 - 1) >= 2*4*ct2"], "ExactSet", [[9]], project=["gamma"],
          note="gamma <= 9 a priori; gamma <= 5 holds here, so the only survivor is a contradiction."),
        S("4.16-eq4", sec,
          "It follows that $\\gamma\\geq 5$, i.e., $\\gamma=5 $, and further "
          "$5>4+\\frac{1}{2}(\\sum\\limits_{i\\geq 2}p_i+\\sum\\limits_{i\\geq 2}\\ti p_i)$. It gives "
          "$\\sum\\limits_{i\\geq 2}p_i+\\sum\\limits_{i\\geq 2}\\ti p_i\\leq 1.$",
          [V("gamma", 1, 5, True), V("beta", 2, 3, True), V("ct1", 2, 200), V("S", 0, 200), V("c1", 1, 800)],
          ["c1 >= ct1 + beta + 1", "gamma*(ct1 - 1) >= (c1 + ct1)*beta + ct1*S/2"], "ExactSet",
          [[5, 0], [5, 1]], project=["gamma", "S"],
          note="S is the sum of p_i and p~_i over i >= 2; c1 = p1 + c~1 + beta with p1 >= 1."),
        S("4.16-final", sec,
          "(4) and \\ref{4.6} give $5\\ti c_1> 2(c_1+\\ti c_1)$ i.e. $c_1<\\frac{3}{2}\\ti c_1$. But "
          "$c_1\\geq 3c_2>\\frac{3}{2}\\ti c_1$ since $\\alpha\\geq 2$, a contradiction.",
          [V("c2", 1, 200), V("ct1", 1, 400), V("c1", 1, 1200)],
          ["5*ct1 > 2*(c1 + ct1)", "c1 >= 3*c2", "ct1 < 2*c2"], "Empty"),
    ]
    return out


FILES = {
    "2.4.json": prop_2_4,
    "3.4.json": lemma_3_4,
    "3.6.json": section_3_6,
    "4.04-4.07.json": section_4_early,
    "4.12.json": lemma_4_12,
    "4.13-4.16.json": section_4_13_on,
}


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "scenarios"
    out_dir.mkdir(parents=True, exist_ok=True)
    for fname, build in FILES.items():
        with open(out_dir / fname, "w") as f:
            json.dump(build(), f, indent=1, ensure_ascii=False)
            f.write("\n")


if __name__ == "__main__":
    main()
