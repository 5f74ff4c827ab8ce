"""
Reproducing the published coefficient lists
===========================================

"""

from torsionpoly.fixtures import PRINTED, check_fixture

for key in PRINTED:
    result = check_fixture(key)
    print(key, result.passed, f'{result.oracle_error:.1e}')
    # (index, printed token, adopted reading, oracle agrees)
    for misprint in result.misprints:
        print('   ', misprint)
