"""Regenerates the strata CSM classes in cubic_strata.json.

Singular plane cubics in P^9, stratified by singularity type. Each stratum
closure has a resolution that is a projective bundle over a product of
projective planes (or a flag variety); pushing c(T) forward and subtracting
the deeper strata gives c_SM of the open stratum. Output is the csm block of
the strata file: h^k coefficient arrays on P^9.

Slow (a few minutes of sympy).
"""
import json
import sympy as sp
z,Hp,H,t = sp.symbols('z Hp H t')
A,B,a,b,c = sp.symbols('A B a b c')

def grade_parts(expr, vars_, maxdeg):
    p = sp.Poly(sp.expand(expr), *vars_)
    parts = [0]*(maxdeg+1)
    for mon, co in p.terms():
        d = sum(mon)
        if d <= maxdeg:
            parts[d] += co*sp.prod([v**e for v,e in zip(vars_,mon)])
    return parts

def segre(cE, vars_, maxdeg):
    # cE: total chern class polynomial in vars_; returns list s_0..s_maxdeg
    parts = grade_parts(cE, vars_, maxdeg)
    ct = sum(parts[i]*t**i for i in range(maxdeg+1))
    inv = sp.series(1/ct, t, 0, maxdeg+1).removeO()
    inv = sp.expand(inv)
    return [sp.expand(inv.coeff(t, i)) for i in range(maxdeg+1)]

# P^2
def int_P2(expr):
    return sp.Poly(sp.expand(expr), H).coeff_monomial(H**2) if sp.expand(expr)!=0 else 0
cK = 1 - H + H**2
sK = segre(cK, [H], 2)
def int_F(expr):
    # F = P(K) over P^2, zeta_F = Hp, rank 2, dim 3
    e = sp.expand(expr)
    if e == 0: return 0
    p = sp.Poly(e, Hp, H)
    tot = 0
    for (j,m), co in p.terms():
        if j+m != 3: continue
        i = j-1
        if i < 0: continue
        tot += co*int_P2(sK[i]*H**m)
    return tot
def int_bundle(expr, cE, rank, base_vars, base_dim, int_base):
    s = segre(cE, base_vars, base_dim)
    e = sp.expand(expr)
    if e == 0: return 0
    p = sp.Poly(e, z, *base_vars)
    tot = 0
    for mon, co in p.terms():
        j = mon[0]; rest = mon[1:]
        if j + sum(rest) != rank-1+base_dim: continue
        i = j - rank + 1
        if i < 0 or i > base_dim: continue
        tot += co*int_base(s[i]*sp.prod([v**k for v,k in zip(base_vars,rest)]))
    return tot

def push(alpha, pullh, integ, dim):
    return [sp.expand(integ(sp.expand(alpha*pullh**k))) for k in range(10)]

def chern_sym(c1,c2,k):
    u,v=sp.symbols('u v')
    roots=[(k-i)*u+i*v for i in range(k+1)]
    prod=sp.expand(sp.prod([1+r for r in roots]))
    # express in elementary symmetric e1=u+v,e2=uv
    res = sp.polys.polyfuncs.symmetrize(prod,[u,v],formal=True)
    names = [s for s,_ in res[2]]
    return sp.expand(res[0].subs({names[0]:c1, names[1]:c2}))

# I: Veronese P^2 with h -> 3H
cI = push((1+H)**3, 3*H, int_P2, 2)
# X: P2xP2, h -> 2a+b
def int_P2P2(e):
    e=sp.expand(e); 
    return sp.Poly(e,a,b).coeff_monomial(a**2*b**2) if e!=0 else 0
pX = push((1+a)**3*(1+b)**3, 2*a+b, int_P2P2, 4)
cX = [pX[k]-cI[k] for k in range(10)]
# S: P(Sym^3 K) over P^2
cS3K = chern_sym(-H, H**2, 3)
cS3K = sum(grade_parts(cS3K,[H],2))
def intS(e): return int_bundle(e, cS3K, 4, [H], 2, int_P2)
cT_S = (1+H)**3*sum(grade_parts(cS3K,[H],2)[i]*(1+z)**(4-i) for i in range(3))
pS = push(cT_S, z, intS, 5)
cS = [pS[k]-cX[k]-2*cI[k] for k in range(10)]
# T: (P2)^3 h-> a+b+c
def intP2c(e):
    e=sp.expand(e)
    return sp.Poly(e,a,b,c).coeff_monomial(a**2*b**2*c**2) if e!=0 else 0
pT = push((1+a)**3*(1+b)**3*(1+c)**3, a+b+c, intP2c, 6)
cT = [sp.Rational(pT[k]-6*cS[k]-3*cX[k]-cI[k],6) for k in range(10)]
# G+P: P5xP2 h->A+B
def intP5P2(e):
    e=sp.expand(e)
    return sp.Poly(e,A,B).coeff_monomial(A**5*B**2) if e!=0 else 0
pGP = push((1+A)**6*(1+B)**3, A+B, intP5P2, 7)
# F base: c(TF)
cTF = (1+H)**3*((1+Hp)**2 - H*(1+Hp) + H**2)
# cusp: E = Sym3K + (H - 2Hp)
cE = sp.expand(cS3K*(1+H-2*Hp))
def intC(e): return int_bundle(e, cE, 5, [Hp,H], 3, int_F)
parts = grade_parts(cE,[Hp,H],3)
cTC = cTF*sum(parts[i]*(1+z)**(5-i) for i in range(4))
Da = z + 3*(Hp-H); Dc = z + H - 2*Hp
def inv_series(D, deg):
    return sum((-D)**i for i in range(deg+1))
alphaC = cTC*inv_series(Da,7)*inv_series(Dc,7)
cC = push(alphaC, z, intC, 7)
# P: E_P = L (x) E_conic, E_conic: Sym2K + (L x O(1)); L has c1 = -Hp
cS2K = sum(grade_parts(chern_sym(-H,H**2,2),[H],2))
# chern of Sym2K (x) L: roots 2u-Hp, u+v-Hp, 2v-Hp
u,v=sp.symbols('u v')
def chern_twist_sym(k, Lc1):
    roots=[(k-i)*u+i*v+Lc1 for i in range(k+1)]
    prod=sp.expand(sp.prod([1+r for r in roots]))
    res = sp.polys.polyfuncs.symmetrize(prod,[u,v],formal=True)
    names=[s for s,_ in res[2]]
    return sp.expand(res[0].subs({names[0]:-H, names[1]:H**2}))
cEP = sp.expand(chern_twist_sym(2, -Hp)*(1 + (-Hp) + (H - Hp)))
cEP = sum(grade_parts(cEP,[Hp,H],3))
def intP(e): return int_bundle(e, cEP, 4, [Hp,H], 3, int_F)
parts = grade_parts(cEP,[Hp,H],3)
cTP = cTF*sum(parts[i]*(1+z)**(4-i) for i in range(4))
Da = z + Hp - 2*H; De = z + H - 2*Hp
alphaP = cTP*inv_series(Da,6)*inv_series(De,6)
cP = push(alphaP, z, intP, 6)
cG = [pGP[k]-cP[k]-3*cT[k]-3*cS[k]-2*cX[k]-cI[k] for k in range(10)]

classes = {'C': cC, 'G': cG, 'P': cP, 'T': cT, 'S': cS, 'X': cX, 'I': cI}
# the lists above are indexed by dimension, [P^k]; the file wants h^k
print(json.dumps({k: [str(x) for x in reversed(v)] for k, v in classes.items()}))
