"""Count maximal weakly separated collections by maximal clique enumeration."""
from blades.enumeration import TWO_INTERVAL, enumerate_collections

for n in range(4, 9):
    row = [enumerate_collections(k, n).count for k in range(2, n - 1)]
    print(f"n={n}:", row)

for n in range(6, 9):
    row = [enumerate_collections(k, n, filter=TWO_INTERVAL).count for k in range(3, n - 2)]
    print(f"n={n} two-interval:", row)
