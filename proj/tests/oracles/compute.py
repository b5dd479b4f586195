#!/usr/bin/env python3
#   Copyright 2026 The sgpd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Brute-force oracles for the values frozen in the C++ tests.  Everything
# here works from definitions only and shares no code with the library.

import itertools
from fractions import Fraction


def words(A, max_len):
    n = len(A)
    out = []
    for L in range(1, max_len + 1):
        for w in itertools.product(range(n), repeat=L):
            if all(A[w[i]][w[i + 1]] for i in range(L - 1)):
                out.append(w)
    return out


def edge_matrix_by_search(A):
    # A(i,j) = 1 iff s(i) = r(j), over all maps into 2n vertices.
    n = len(A)
    for s in itertools.product(range(2 * n), repeat=n):
        for r in itertools.product(range(2 * n), repeat=n):
            if all((A[i][j] == 1) == (s[i] == r[j]) for i in range(n) for j in range(n)):
                return True
    return False


def graphable_count_3x3():
    count = 0
    for bits in range(512):
        A = [[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]
        count += edge_matrix_by_search(A)
    return count


def prefix_partitions(A, x, max_len):
    ws = [w for w in words(A, max_len) if w[0] == x]
    longest = [w for w in ws if len(w) == max_len]
    out = []
    for k in range(1, len(ws) + 1):
        for H in itertools.combinations(ws, k):
            ok = all(not (a[:len(b)] == b or b[:len(a)] == a)
                     for a, b in itertools.combinations(H, 2))
            ok = ok and all(any(w[:len(h)] == h for h in H) for w in longest)
            if ok:
                out.append(H)
    return out


def main():
    print("markov word counts")
    for name, A, L in [("golden", [[1, 1], [1, 0]], 3), ("golden", [[1, 1], [1, 0]], 4),
                       ("one", [[1]], 4), ("full2", [[1, 1], [1, 1]], 4),
                       ("perm", [[0, 1], [1, 0]], 4)]:
        print(f"  {name} L={L}: {len(words(A, L))}")
    print("graphable 3x3 matrices:", graphable_count_3x3())
    for name, A in [("golden", [[1, 1], [1, 0]]), ("one", [[1]])]:
        for x in range(len(A)):
            print(f"prefix partitions {name} x={x + 1} L=4:", len(prefix_partitions(A, x, 4)))
    # Rotation by (3/5, 4/5) is orthogonal.
    c, s = Fraction(3, 5), Fraction(4, 5)
    print("rotation orthogonal:", c * c + s * s == 1)


if __name__ == "__main__":
    main()
