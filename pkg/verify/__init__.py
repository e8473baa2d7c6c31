from verify.claims import reproduce_paper, claims_exit_code
from verify.les import les_bound_check, skein_triple
from verify.growth import growth_probe

__all__ = ['reproduce_paper', 'claims_exit_code', 'les_bound_check', 'skein_triple', 'growth_probe']
