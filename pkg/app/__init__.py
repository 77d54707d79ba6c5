# coxinv: involution length polynomials in finite Coxeter groups
