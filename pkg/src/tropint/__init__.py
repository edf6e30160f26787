"""Exact tropical intersection theory toolkit.

Submodules:

* ``intlinalg``      -- integer/rational exact linear algebra (HNF, SNF, kernels)
* ``feasibility``    -- Fourier-Motzkin elimination over Q
* ``fans``           -- simplicial rational fans, stars, normal vectors
* ``cycles``         -- weighted balanced fans, divisors, cycle equivalence
* ``matroids``       -- matroids, Bergman fans, the permutohedral completion
* ``minkowski``      -- Minkowski weights, displacement products, certificates
* ``linear_varieties`` -- linear ideals, tropicalization, cohomology rings
* ``serialize``      -- the JSON document formats
* ``cli``            -- the ``tropint`` command-line tool
"""

__version__ = "0.1.0"
