# rate-1/2 systematic encoder with two memory cells over GF(2)
q 2 1
n 2
k 1
m 2
systematic
T
0 1 0 1
0 0 1 0
1 1 1 0
