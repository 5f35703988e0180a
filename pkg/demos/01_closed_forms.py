"""Closed-form tour of the two document models.

A search is modelled as a stream of documents with two measurable
properties: relevance (R) and occurrence of an expansion term (X).
Query expansion pre-selects documents containing X before checking
relevance; its value is the relative precision boost

    Delta = (P(R|X) - P(R)) / P(R)

and its "classicality" is measured by the Accardi invariant

    A = (P(X) - P(X|~R)) / (P(X|R) - P(X|~R))

which equals P(R) (so 0 <= A <= 1) whenever the law of total probability
holds, and can take any real value when it does not.

Run: python3 demos/01_closed_forms.py
"""

import math

from irboost import (
    ClassicalParams,
    QuantumParams,
    accardi_classical,
    accardi_quantum,
    boost_classical,
    boost_quantum,
    interference_term,
    posterior_bayes,
    posterior_quantum,
    quantum_rates,
)

print("=== Classical urn model ===")
params = ClassicalParams(p=0.5, q_r=0.8, q_n=0.2)
print(f"parameters:        p={params.p}, q_r={params.q_r}, q_n={params.q_n}")
print(f"Bayes posterior:   P(R|X) = {posterior_bayes(params):.4f}")
print(f"precision boost:   Delta  = {boost_classical(params):.4f}")
print(f"Accardi invariant: A      = {accardi_classical(params):.4f}  (= p, always in [0,1])")

print()
print("A term anti-correlated with relevance hurts precision:")
bad = ClassicalParams(p=0.5, q_r=0.2, q_n=0.8)
print(f"  (q_r={bad.q_r}, q_n={bad.q_n}) -> Delta = {boost_classical(bad):.4f}")

print()
print("=== Quantum spin-1/2 model ===")
qparams = QuantumParams(phi=math.pi / 3, alpha=math.pi / 4)
rates = quantum_rates(qparams)
print(f"angles:            phi=pi/3, alpha=pi/4")
print(f"rates:             P(R)={rates.p_r:.4f}  P(X|R)={rates.p_x_given_r:.4f}  "
      f"P(X|~R)={rates.p_x_given_n:.4f}  P(X)direct={rates.p_x_direct:.4f}")
print(f"posterior:         P(R|X) = {posterior_quantum(qparams):.4f}  "
      "(depends on alpha only: collapse erases the query state)")
print(f"precision boost:   Delta  = {boost_quantum(qparams):.4f}")
a = accardi_quantum(qparams)
print(f"Accardi invariant: A      = {a:.4f}  <-- exceeds 1: impossible classically")
print(f"interference gap:  P(X)direct - mixture = {interference_term(qparams):.4f}")

print()
print("And a witness below zero:")
neg = QuantumParams(phi=3 * math.pi / 4, alpha=3 * math.pi / 4)
print(f"  (phi=3pi/4, alpha=3pi/4) -> A = {accardi_quantum(neg):.4f}")
