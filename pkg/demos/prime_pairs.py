"""Search for admissible prime pairs and re-check the certificates.

Run as: python3 demos/prime_pairs.py
"""

import json

from ggt import SearchRequest, find_prime_pair, validate_certificate

# The search wants the lexicographically least pair of odd primes (p, q)
# with p > d, a degree-forcing condition at ell of level t, splitting
# congruences on q, and q of order exactly 2n mod p.
req = SearchRequest(n=3, ell=3, t=3, d=5)
cert = find_prime_pair(req)
print("request:", req.to_json())
print("found: p =", cert.pair.p, " q =", cert.pair.q,
      " (order of q mod p:", cert.pair.m, ")")
print("first forced degree k_min =", cert.k_min)

# Certificates carry witnesses and survive a round trip through JSON.
blob = json.dumps(cert.to_json(), indent=2, sort_keys=True)
print("\ncertificate is", len(blob), "bytes of JSON")

# The validator recomputes all five conditions along separate code paths:
# trial division, naive order loops, group-order divisibility.
verdict = validate_certificate(cert)
for name, ok in verdict.items():
    print(f"  {name}: {ok}")

# A curiosity worth knowing: the minimal p is monotone when t grows
# along divisibility, but not in t alone.
p2 = find_prime_pair(SearchRequest(1, 3, 2, 5)).pair.p
p3 = find_prime_pair(SearchRequest(1, 3, 3, 5)).pair.p
print(f"\nn=1, ell=3, d=5: t=2 needs p={p2}, but t=3 gets away with p={p3}")
print("(forcing every degree to be even is a harder ask than forcing"
      " divisibility by three)")
