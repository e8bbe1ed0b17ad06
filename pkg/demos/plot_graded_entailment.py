"""
Graded entailment between word distributions
============================================

Co-occurrence counts become distributions; the largest ``p`` with
``p F(x) <= F(y)`` measures how nearly one word entails another.
"""

from infoorder import Bayesian, RestrictedParams, Restricted, graded_leq, max_graded_p
from infoorder.cli import ingest_counts
from infoorder.simplex import make_distribution

counts = "dog\t60\t25\t15\nanimal\t65\t30\t5\ncat\t30\t50\t20\n"
words = {w: make_distribution(d["values"]) for w, d in ingest_counts(counts).items()}

for a, b in (("dog", "animal"), ("animal", "dog"), ("cat", "animal")):
    p = max_graded_p(Bayesian(), words[a], words[b])
    print(f"{a} -> {b}: sup p = {p if p is None else round(p, 6)}")

# full entailment fails, but a looser restricted order accepts it
print("p=1:", graded_leq(Bayesian(), 1.0, words["dog"], words["animal"]))
print("loosened:", Restricted(RestrictedParams.build(3, 0.0, [1.0])).leq(words["dog"], words["animal"]))
