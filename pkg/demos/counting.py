"""Parameter catalog of the two-parameter family against the closed-form class counts."""
from semifields import count_classes, enumerate_catalog

for m in range(1, 11):
    cat = enumerate_catalog(3, m)
    sf, pl = count_classes(3, m)
    flag = "" if cat.match else "   <- range count differs"
    print(f"m={m:>2}  pairs={cat.raw_count:>2}  semifields={sf:>2}  planar={pl:>2}{flag}")
