"""Monads in bicategories, checked by exhaustive enumeration on finite categories."""
from .adjmonadic import (Adjunction, adj_duals, adjunction_to_monad, check_adjunction,
                         comparison, hom_adjunction, is_monadic, is_representably_monadic,
                         make_adjunction, monad_to_adjunction, repr_adjequiv_check,
                         total_adjunction)
from .bicat import CAT_FIN, cat_fin_bicat, check_bicat_laws, check_pseudofunctor, op1, op2
from .emkleisli import (EMCone, KleisliCocone, check_em_universal, check_kleisli_universal,
                        em_category, em_functor, em_functor_alt, free_alg_functor,
                        kleisli_category, op1_em_from_kleisli, univ_kleisli)
from .fincat import FinCat, Functor, NatTrans, functor_category, functor_props, validate_category
from .monad import (Monad, check_monad, compose_monads, hom_monad, id_monad, mnd_bicat)
from .workspace import load_workspace, parse_workspace

__all__ = [
    "Adjunction", "CAT_FIN", "EMCone", "FinCat", "Functor", "KleisliCocone", "Monad",
    "NatTrans", "adj_duals", "adjunction_to_monad", "cat_fin_bicat", "check_adjunction",
    "check_bicat_laws", "check_em_universal", "check_kleisli_universal", "check_monad",
    "check_pseudofunctor", "comparison", "compose_monads", "em_category", "em_functor",
    "em_functor_alt", "free_alg_functor", "functor_category", "functor_props",
    "hom_adjunction", "hom_monad", "id_monad", "is_monadic", "is_representably_monadic",
    "kleisli_category", "load_workspace", "make_adjunction", "mnd_bicat",
    "monad_to_adjunction", "op1", "op1_em_from_kleisli", "op2", "parse_workspace",
    "repr_adjequiv_check", "total_adjunction", "univ_kleisli", "validate_category",
]
