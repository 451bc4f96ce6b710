from .theta import eta, theta_int, theta_ml, theta_odd
from .mordell import E_fn, R_ab, beta_fn, g_ab, mordell_h, zwegers_R
from .appell import alpha, appell_G, appell_K1, appell_Phi, lerch_mu
from .hurwitz import hurwitz_H, hurwitz_H_bruteforce
from .eisenstein import e21_star, e21_holomorphic_part, e21_completion_part, hz_beta

__all__ = [
    "eta", "theta_int", "theta_ml", "theta_odd",
    "E_fn", "R_ab", "beta_fn", "g_ab", "mordell_h", "zwegers_R",
    "alpha", "appell_G", "appell_K1", "appell_Phi", "lerch_mu",
    "hurwitz_H", "hurwitz_H_bruteforce",
    "e21_star", "e21_holomorphic_part", "e21_completion_part", "hz_beta",
]
