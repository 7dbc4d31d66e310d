"""
Searching for a generic representative
======================================

Random maps of exact bidegree are generic with probability one, so a small
budget suffices. The certificate records every prime and randomization
used, and replays to the same document.
"""

import json

from stablemaps.certify import SearchConfig, replay, search_generic

F, cert = search_generic(SearchConfig(3, 2, seed=0, budget=50))
print("f =", F.f)
print("g =", F.g)
print(f"{cert.verdict}: {cert.c_found} cusps, {cert.n_found} nodes")

doc = cert.as_dict()
print(json.dumps({k: doc[k] for k in ("d1", "d2", "c_found", "n_found", "verdict", "exact_mode")}, indent=2))
print("replays identically:", replay(cert).to_json() == cert.to_json())
