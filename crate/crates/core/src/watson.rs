//! Watson's method applied to the quintic factor g(X) of D₅: the depressed
//! quintic, its resolvent data, the sextic h and its rational root θ, the
//! radicand u₁⁵ and the root X = u₁ + u₂ + u₃ + u₄ − a₁/5, all as exact
//! rational functions of b over Q(α), α² = 5.
//!
//! Square roots and the fifth root are never extracted. Their closed forms
//! are built directly and the defining power identities are checked.

use crate::check::Check;
use crate::error::{Error, Result};
use crate::field::{Cyclo, Field, GaloisAction, GaloisExp, Rational};
use crate::ratfunc::var::{Indeterminate, B, U, X, XDep};
use crate::ratfunc::{RatFunc, UniPoly};

/// Rational functions of b over Q(ζ₅); the Watson data lives in Q(α)(b).
pub type Qb = RatFunc<Cyclo, B>;

/// Which square root of 5 plays the role of α in g(X).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaSign {
    Plus,
    Minus,
}

impl AlphaSign {
    fn apply<T: GaloisAction>(self, x: T) -> T {
        match self {
            AlphaSign::Plus => x,
            AlphaSign::Minus => x.galois(GaloisExp::SIGMA),
        }
    }
}

fn qa(p: i64, q: i64) -> Cyclo {
    Cyclo::quad_int(p, q)
}

/// Polynomial in b, coefficients listed from b⁰ up as p + qα.
fn lin(terms: &[(i64, i64)]) -> Qb {
    Qb::from_poly(UniPoly::new(terms.iter().map(|&(p, q)| qa(p, q)).collect()))
}

fn frac(n: i64, d: i64) -> Qb {
    Qb::constant(Cyclo::from_rational(&Rational::frac(n, d)))
}

fn bvar() -> Qb {
    Qb::var()
}

fn qconst(p: i64, q: i64) -> Qb {
    Qb::constant(qa(p, q))
}

/// 2b + 11 + 5α
fn pfac() -> Qb {
    lin(&[(11, 5), (2, 0)])
}

/// −2b − 11 + 5α
fn nfac() -> Qb {
    lin(&[(-11, 5), (-2, 0)])
}

/// The quantities of Watson's method for g. Fields are named as in the
/// usual presentation; `yw`, `zw` are the unbarred Y and Z.
#[derive(Debug, Clone, PartialEq)]
pub struct WatsonData {
    pub a1: Qb,
    pub c: Qb,
    pub d: Qb,
    pub e: Qb,
    pub f: Qb,
    pub k: Qb,
    pub l: Qb,
    pub m: Qb,
    pub delta: Qb,
    pub sqrt_delta: Qb,
    pub theta: Qb,
    pub t: Qb,
    pub r1: Qb,
    pub r2: Qb,
    pub xp: Qb,
    pub yw: Qb,
    pub zw: Qb,
    pub xbar: Qb,
    pub ybar: Qb,
    pub zbar: Qb,
    /// Coefficients of X = (5−α)/100·(A₄u⁴ + … + A₀).
    pub a: [Qb; 5],
    /// u₁⁵ as computed, X′²Y/Z².
    pub u1_fifth: Qb,
    /// u₁ = prefactor · u.
    pub prefactor: Qb,
    /// u⁵.
    pub u5: Qb,
}

impl WatsonData {
    fn fields(&self) -> Vec<(&'static str, &Qb)> {
        vec![
            ("a1", &self.a1),
            ("C", &self.c),
            ("D", &self.d),
            ("E", &self.e),
            ("F", &self.f),
            ("K", &self.k),
            ("L", &self.l),
            ("M", &self.m),
            ("delta", &self.delta),
            ("sqrt_delta", &self.sqrt_delta),
            ("theta", &self.theta),
            ("T", &self.t),
            ("R1", &self.r1),
            ("R2", &self.r2),
            ("X'", &self.xp),
            ("Y", &self.yw),
            ("Z", &self.zw),
            ("Xbar", &self.xbar),
            ("Ybar", &self.ybar),
            ("Zbar", &self.zbar),
            ("A0", &self.a[0]),
            ("A1", &self.a[1]),
            ("A2", &self.a[2]),
            ("A3", &self.a[3]),
            ("A4", &self.a[4]),
            ("u1^5", &self.u1_fifth),
            ("u1/u", &self.prefactor),
            ("u^5", &self.u5),
        ]
    }

    /// The root X(u) = (5−α)/100·ΣAᵢuⁱ as a polynomial in u.
    pub fn root(&self) -> UniPoly<Qb, U> {
        // (5−α)/100 on this branch, since u₁ = (5−α)/100·A₁u
        let s = self.prefactor.div_ref(&self.a[1]).expect("A1 is nonzero");
        UniPoly::new(self.a.iter().map(|ai| ai.mul_ref(&s)).collect())
    }
}

impl GaloisAction for WatsonData {
    fn galois(&self, k: GaloisExp) -> Self {
        let g = |x: &Qb| x.galois(k);
        WatsonData {
            a1: g(&self.a1),
            c: g(&self.c),
            d: g(&self.d),
            e: g(&self.e),
            f: g(&self.f),
            k: g(&self.k),
            l: g(&self.l),
            m: g(&self.m),
            delta: g(&self.delta),
            sqrt_delta: g(&self.sqrt_delta),
            theta: g(&self.theta),
            t: g(&self.t),
            r1: g(&self.r1),
            r2: g(&self.r2),
            xp: g(&self.xp),
            yw: g(&self.yw),
            zw: g(&self.zw),
            xbar: g(&self.xbar),
            ybar: g(&self.ybar),
            zbar: g(&self.zbar),
            a: std::array::from_fn(|i| g(&self.a[i])),
            u1_fifth: g(&self.u1_fifth),
            prefactor: g(&self.prefactor),
            u5: g(&self.u5),
        }
    }
}

fn five_minus_alpha_over_100() -> Qb {
    qconst(5, -1) * frac(1, 100)
}

/// The displayed closed forms, α branch.
pub fn closed_forms() -> WatsonData {
    let b = bvar();
    let (p, n) = (pfac(), nfac());
    let p2 = p.square();
    let a1 = frac(1, 20) * qconst(-5, 1) * lin(&[(-3, -1), (-7, 3), (-2, 0)]);
    let c = frac(1, 4000) * qconst(-3, 1) * lin(&[(3, 1), (1, 0)]) * lin(&[(3, 1), (-4, 0)]) * n.clone() * p.clone();
    let d = frac(-1, 100_000)
        * qconst(-5, 2)
        * lin(&[(4, 4), (-41, -19), (-27, 11), (-8, 0)])
        * n.clone()
        * p2.clone();
    let e = frac(1, 500_000)
        * qconst(-7, 3)
        * lin(&[(12, 6), (-150, -72), (505, 229), (-135, 47), (-60, 6), (-6, 0)])
        * n.clone()
        * p2.clone();
    let f = frac(-1, 12_500_000)
        * qconst(-25, 11)
        * lin(&[
            (44, 20),
            (-794, -360),
            (5326, 2400),
            (-15405, -6475),
            (3790, 2900),
            (-707, 115),
            (-133, 5),
            (-8, 0),
        ])
        * n.clone()
        * p2.clone();
    let k = frac(1, 8000) * qconst(-9, 4) * b.pow(2) * lin(&[(29, 13), (-2, 0)]) * n.clone() * p2.clone();
    let l = frac(1, 140_800_000)
        * qconst(-35, 16)
        * b.pow(4)
        * lin(&[(1, 1), (-2, 0)])
        * lin(&[(-19, 13), (22, 0)])
        * n.pow(2)
        * p.pow(4);
    let m = frac(1, 512_000_000)
        * qconst(-9, 4)
        * b.pow(6)
        * lin(&[(3, 1), (-35, -13), (-11, -11), (-20, 2), (-2, 0)])
        * n.pow(3)
        * p.pow(5);
    let delta = frac(1, 1_024_000) * qconst(123, -55) * n.pow(4) * p.pow(8) * b.pow(14);
    let sqrt_delta = frac(1, 1600) * qconst(0, 1) * (qconst(1, -1) * frac(1, 2)).pow(5) * n.pow(2) * p.pow(4) * b.pow(7);
    let theta = frac(1, 50) * b.clone() * lin(&[(-1, 0), (11, 0), (1, 0)]);
    let t = frac(1, 20_000) * qconst(5, -1) * b.clone() * lin(&[(-2, 1), (1, 0)]) * n.clone() * p2.clone();
    let r1 = frac(1, 4000) * qconst(3, -1) * b.clone() * lin(&[(-1, 1), (2, 0)]) * n.clone() * p2.clone();
    let r2 = frac(1, 2000) * qconst(-2, 1) * b.clone() * lin(&[(1, 1), (-2, 0)]) * n.clone() * p2.clone();
    let two_b_1 = lin(&[(1, 1), (2, 0)]);
    let neg_b_2 = lin(&[(2, 1), (-1, 0)]);
    let neg_2b_1 = lin(&[(-1, 1), (-2, 0)]);
    let xp = frac(1, 200_000) * qconst(-5, 2) * two_b_1.clone() * n.pow(2) * p.pow(3);
    let yw = frac(1, 50_000) * qconst(-5, 2) * neg_b_2.pow(2) * n.pow(2) * p2.clone();
    let zw = frac(1, 2000) * qconst(3, -1) * neg_b_2.clone() * two_b_1.clone() * n.clone() * p.clone();
    let xbar = frac(1, 100_000) * qconst(-5, 2) * neg_b_2.clone() * neg_2b_1.pow(2) * n.clone() * p2.clone();
    let ybar = frac(1, 200_000) * qconst(-5, 2) * neg_2b_1.clone() * two_b_1.pow(2) * n.clone() * p2.clone();
    let zbar = frac(1, 4000) * qconst(3, -1) * neg_2b_1.clone() * n.clone() * p2.clone();
    let u1_fifth = frac(1, 800_000_000) * qconst(-25, 11) * n.pow(4) * p.pow(6);
    let prefactor = qconst(-5, 1) * frac(1, 200) * n.clone() * p.clone();
    let u5 = p.div_ref(&n).expect("nonzero");
    let a = [
        lin(&[(-3, -1), (-7, 3), (-2, 0)]),
        lin(&[(-2, 0), (22, 0), (2, 0)]),
        lin(&[(-2, -1), (1, 0)]) * n.clone(),
        frac(-1, 2) * two_b_1 * n.clone(),
        frac(-1, 2) * neg_2b_1 * n,
    ];
    WatsonData {
        a1,
        c,
        d,
        e,
        f,
        k,
        l,
        m,
        delta,
        sqrt_delta,
        theta,
        t,
        r1,
        r2,
        xp,
        yw,
        zw,
        xbar,
        ybar,
        zbar,
        a,
        u1_fifth,
        prefactor,
        u5,
    }
}

/// The alternative writing of u₁⁵ as a fifth power times u⁵:
/// 1/(2¹⁰5⁵)·((−5+α)/10)⁵·(nfac·pfac)⁵·pfac/nfac.
pub fn u1_fifth_as_power() -> Qb {
    let (p, n) = (pfac(), nfac());
    frac(1, 3_200_000) * (qconst(-5, 1) * frac(1, 10)).pow(5) * n.pow(5) * p.pow(5) * p.div_ref(&n).expect("nonzero")
}

/// The quintic g(X) whose roots are the non-trivial X-coordinates split
/// off from D₅, for the chosen square root of 5.
pub fn build_g(sign: AlphaSign) -> UniPoly<Qb, X> {
    let b = bvar();
    let a4 = frac(1, 20) * qconst(-5, 1) * lin(&[(-3, -1), (-7, 3), (-2, 0)]);
    let a3 = frac(1, 5) * qconst(0, 1) * b.clone() * lin(&[(1, 2), (-11, 4), (-1, 0)]);
    let a2 = frac(1, 10) * qconst(-5, 1) * b.pow(2) * lin(&[(-9, -2), (-6, 1), (-1, 0)]);
    let a1 = b.pow(3).scale(&qa(3, 0)) + b.pow(4);
    let a0 = b.pow(4);
    sign.apply(UniPoly::new(vec![a0, a1, a2, a3, a4, Qb::one()]))
}

/// f(x) = g(x − a₁/5) = x⁵ + 10Cx³ + 10Dx² + 5Ex + F.
/// Returns f with a₁ and [C, D, E, F].
pub fn depress(g: &UniPoly<Qb, X>) -> Result<(UniPoly<Qb, XDep>, Qb, [Qb; 4])> {
    if g.degree() != Some(5) || g.lead() != Some(&Qb::one()) {
        return Err(Error::DegenerateSubstitution("expected a monic quintic".into()));
    }
    let a1 = g.coeff(4);
    let shift = UniPoly::<Qb, XDep>::new(vec![-(a1.clone() * frac(1, 5)), Qb::one()]);
    let f = g.compose(&shift);
    let c = f.coeff(3) * frac(1, 10);
    let d = f.coeff(2) * frac(1, 10);
    let e = f.coeff(1) * frac(1, 5);
    let ff = f.coeff(0);
    Ok((f, a1, [c, d, e, ff]))
}

/// K, L, M and the discriminant of f.
pub fn resolvent(f: &UniPoly<Qb, XDep>, cdef: &[Qb; 4]) -> Result<[Qb; 4]> {
    let [c, d, e, ff] = cdef;
    let k = e.clone() + c.square().scale(&qa(3, 0));
    let n = |x: i64| Qb::from_i64(x);
    let l = n(-2) * d.clone() * ff.clone() + n(3) * e.square() - n(2) * c.square() * e.clone()
        + n(8) * c.clone() * d.square()
        + n(15) * c.pow(4);
    let m = c.clone() * ff.square() - n(2) * d.clone() * e.clone() * ff.clone() + e.pow(3)
        - n(2) * c.square() * d.clone() * ff.clone()
        - n(11) * c.square() * e.square()
        + n(28) * c.clone() * d.square() * e.clone()
        - n(16) * d.pow(4)
        + n(35) * c.pow(4) * e.clone()
        - n(40) * c.pow(3) * d.square()
        - n(25) * c.pow(6);
    let delta = f.discriminant()?;
    Ok([k, l, m, delta])
}

/// h(x) = x⁶ − (K/5)x⁴ + (L/125)x² − (α√δ/390625)x + M/3125.
pub fn sextic(k: &Qb, l: &Qb, m: &Qb, sqrt_delta: &Qb, sign: AlphaSign) -> UniPoly<Qb, XDep> {
    let alpha = sign.apply(qconst(0, 1));
    UniPoly::new(vec![
        m.clone() * frac(1, 3125),
        -(alpha * sqrt_delta.clone() * frac(1, 390_625)),
        l.clone() * frac(1, 125),
        Qb::zero(),
        -(k.clone() * frac(1, 5)),
        Qb::zero(),
        Qb::one(),
    ])
}

/// R₂, X′, Y, Z, X̄, Ȳ, Z̄ from C, D, E, θ, T and the square root R₁.
pub fn radical_data(cde: [&Qb; 3], theta: &Qb, t: &Qb, r1: &Qb) -> Result<[Qb; 7]> {
    let [c, d, e] = cde;
    if theta.is_zero() || theta == c || *theta == -c.clone() {
        return Err(Error::DegenerateSubstitution("theta must differ from 0 and from ±C".into()));
    }
    let half = frac(1, 2);
    let c2 = c.square();
    let th2 = theta.square();
    let top = c.clone() * (d.square() - t.square())
        + (c2.clone() - th2.clone()) * (c2 + th2.scale(&qa(3, 0)) - e.clone());
    let r2 = top.div_ref(&(r1.clone() * theta.clone()))?;
    let xp = (-d.clone() + t.clone() + r1.clone()) * half.clone();
    let yw = (-d.clone() - t.clone() + r2.clone()) * half.clone();
    let zw = -c.clone() - theta.clone();
    let xbar = (-d.clone() + t.clone() - r1.clone()) * half.clone();
    let ybar = (-d.clone() - t.clone() - r2.clone()) * half;
    let zbar = -c.clone() + theta.clone();
    Ok([r2, xp, yw, zw, xbar, ybar, zbar])
}

/// Result of running the pipeline: the computed data and the comparison
/// of every stage against its closed form.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub data: WatsonData,
    pub checks: Vec<Check>,
}

/// Runs the α branch from g(X) and checks every stage; the −α branch is the
/// image under ζ ↦ ζ².
pub fn run(sign: AlphaSign) -> Result<Pipeline> {
    let expected = closed_forms();
    let mut checks = Vec::new();
    let g = build_g(AlphaSign::Plus);
    let (f, a1, cdef) = depress(&g)?;
    checks.push(Check::zero("x^4 coefficient of f", &f.coeff(4)));
    let [c, d, e, ff] = cdef.clone();

    let [k, l, m, delta] = resolvent(&f, &cdef)?;
    // the square roots are taken from their closed forms once squared back
    let sqrt_delta = expected.sqrt_delta.clone();
    checks.push(Check::equal("sqrt_delta^2 = delta", &sqrt_delta.square(), &delta));
    let h = sextic(&k, &l, &m, &sqrt_delta, AlphaSign::Plus);
    let theta = expected.theta.clone();
    checks.push(Check::zero("h(theta) = 0", &h.eval(&theta)));

    let t = expected.t.clone();
    let r1 = expected.r1.clone();
    let r1_sq = (d.clone() - t.clone()).square()
        + (c.clone() - theta.clone()).square() * (c.clone() + theta.clone()).scale(&qa(4, 0));
    checks.push(Check::equal("R1^2 = (D-T)^2 + 4(C-theta)^2(C+theta)", &r1.square(), &r1_sq));
    let [r2, xp, yw, zw, xbar, ybar, zbar] = radical_data([&c, &d, &e], &theta, &t, &r1)?;

    let u1_fifth = xp.square() * yw.clone() / zw.square();
    checks.push(Check::equal("u1^5 as fifth power times u^5", &u1_fifth, &u1_fifth_as_power()));
    let prefactor = expected.prefactor.clone();
    let u5 = u1_fifth.div_ref(&prefactor.pow(5))?;
    let s = five_minus_alpha_over_100();
    let pre = &prefactor;
    let a = [
        -(a1.clone() * frac(1, 5)) / s.clone(),
        pre.clone() / s.clone(),
        xbar.clone() / zbar.square() * pre.pow(2) / s.clone(),
        xbar.clone() * ybar.clone() / (zw.clone() * zbar.pow(3)) * pre.pow(3) / s.clone(),
        xbar.square() * ybar.clone() / (zw.square() * zbar.pow(4)) * pre.pow(4) / s,
    ];

    let data = WatsonData {
        a1,
        c,
        d,
        e,
        f: ff,
        k,
        l,
        m,
        delta,
        sqrt_delta,
        theta,
        t,
        r1,
        r2,
        xp,
        yw,
        zw,
        xbar,
        ybar,
        zbar,
        a,
        u1_fifth,
        prefactor,
        u5,
    };
    for ((name, got), (_, want)) in data.fields().into_iter().zip(expected.fields()) {
        checks.push(Check::equal(format!("{name} closed form"), got, want));
    }
    checks.push(display_coefficients(&data));
    checks.push(residue_check("g(X(u)) = 0 mod u^5 - phi(b)", &root_residue(&g, &data)?));
    checks.push(kummer_check(&data)?);

    let data = sign.apply(data);
    if sign == AlphaSign::Minus {
        let g = build_g(sign);
        checks.push(residue_check("g(X(u)) = 0 mod u^5 - phi(b), conjugate branch", &root_residue(&g, &data)?));
    }
    Ok(Pipeline { data, checks })
}

/// The expanded coefficients of X(u) in powers of b.
fn display_coefficients(data: &WatsonData) -> Check {
    let shown = [
        lin(&[(-3, -1), (-7, 3), (-2, 0)]),
        lin(&[(-2, 0), (22, 0), (2, 0)]),
        lin(&[(-3, 1), (-7, 7), (-2, 0)]),
        lin(&[(-7, 3), (12, -4), (2, 0)]),
        lin(&[(-18, 8), (-12, 6), (-2, 0)]),
    ];
    match (0..5).find(|&i| data.a[i] != shown[i]) {
        None => Check::pass("A0..A4 match the expanded root"),
        Some(i) => Check::fail("A0..A4 match the expanded root", format!("A{i} = {}", data.a[i])),
    }
}

/// g(X(u)) reduced modulo u⁵ − u5; zero exactly when X(u) is a root.
pub fn root_residue(g: &UniPoly<Qb, X>, data: &WatsonData) -> Result<UniPoly<Qb, U>> {
    let modulus = UniPoly::<Qb, U>::monomial(Qb::one(), 5) - UniPoly::constant(data.u5.clone());
    let xu = data.root();
    let mut acc = UniPoly::<Qb, U>::zero();
    for c in g.coeffs().iter().rev() {
        acc = (&(&acc * &xu) + &UniPoly::constant(c.clone())).rem(&modulus)?;
    }
    Ok(acc)
}

fn residue_check(name: &str, residue: &UniPoly<Qb, U>) -> Check {
    match residue.degree() {
        None => Check::pass(name),
        Some(d) => Check::fail(name, format!("nonzero residue of degree {d} in u")),
    }
}

/// (1/5)Σᵢ ζ^{−i} X(ζⁱu) recovers u₁ = prefactor·u.
pub fn kummer_check(data: &WatsonData) -> Result<Check> {
    let xu = data.root();
    let mut acc = UniPoly::<Qb, U>::zero();
    for i in 0..5 {
        let z = Cyclo::zeta_pow(i);
        let shifted = xu.scale_var(&Qb::constant(z.clone()));
        acc = &acc + &shifted.scale(&Qb::constant(z.inv()?));
    }
    let acc = acc.scale(&frac(1, 5));
    let want = UniPoly::monomial(data.prefactor.clone(), 1);
    Ok(if acc == want {
        Check::pass("Kummer projection recovers u1")
    } else {
        Check::fail("Kummer projection recovers u1", format!("got {acc}"))
    })
}

/// Eisenstein-type criterion at a prime π of Q(α)[b]: π divides every
/// non-leading coefficient, not the leading one, and π² does not divide the
/// constant term. Coefficients that are not polynomials in b give `false`.
pub fn eisenstein_check<V: Indeterminate>(f: &UniPoly<Qb, V>, pi: &UniPoly<Cyclo, B>) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 || pi.degree().unwrap_or(0) == 0 {
        return false;
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for c in f.coeffs() {
        if !c.is_polynomial() {
            return false;
        }
        let lead = c.den().lead().cloned().unwrap_or_else(Cyclo::one);
        coeffs.push(c.num().scale(&lead.inv().expect("monic denominator")));
    }
    let divides = |p: &UniPoly<Cyclo, B>| p.is_zero() || pi.divides(p);
    let pi2 = pi * pi;
    !divides(&coeffs[n])
        && coeffs[..n].iter().all(divides)
        && !(coeffs[0].is_zero() || pi2.divides(&coeffs[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::var::X;

    fn pi() -> UniPoly<Cyclo, B> {
        UniPoly::new(vec![qa(-11, 5), qa(-2, 0)])
    }

    #[test]
    fn g_coefficients() {
        let g = build_g(AlphaSign::Plus);
        let b = bvar();
        assert_eq!(g.coeff(0), b.pow(4));
        assert_eq!(g.coeff(1), b.pow(3).scale(&qa(3, 0)) + b.pow(4));
        assert_eq!(g.coeff(4), closed_forms().a1);
    }

    #[test]
    fn conjugate_branch_flips_alpha() {
        let g = build_g(AlphaSign::Minus);
        let expected = frac(1, 20) * qconst(-5, -1) * lin(&[(-3, 1), (-7, -3), (-2, 0)]);
        assert_eq!(g.coeff(4), expected);
    }

    #[test]
    fn g_times_conjugate_is_d5_over_5() {
        let g = build_g(AlphaSign::Plus);
        let gbar = build_g(AlphaSign::Minus);
        let d5 = crate::curve::tate5_d5(&bvar()).unwrap();
        assert_eq!((&g * &gbar).scale(&Qb::from_i64(5)), d5);
    }

    #[test]
    fn depressed_quintic() {
        let (f, _, [c, _, _, ff]) = depress(&build_g(AlphaSign::Plus)).unwrap();
        assert!(f.coeff(4).is_zero());
        let cf = closed_forms();
        assert_eq!(c, cf.c);
        assert!(pfac().pow(2).num().divides(ff.num()));
    }

    #[test]
    fn theta_is_rejected_when_degenerate() {
        let c = closed_forms().c;
        let zero = Qb::zero();
        let err = radical_data([&c, &zero, &zero], &c, &zero, &Qb::one());
        assert!(matches!(err, Err(Error::DegenerateSubstitution(_))));
    }

    #[test]
    fn u5_at_minus_eleven_halves() {
        let u5 = closed_forms().u5;
        assert_eq!(u5.eval(&Cyclo::from_rational(&Rational::frac(-11, 2))).unwrap(), Cyclo::one());
    }

    #[test]
    fn eisenstein_examples() {
        let (f, _, _) = depress(&build_g(AlphaSign::Plus)).unwrap();
        assert!(eisenstein_check(&f, &pi()));
        let b = UniPoly::<Cyclo, B>::var();
        let x2 = UniPoly::<Qb, X>::monomial(Qb::one(), 2);
        assert!(!eisenstein_check(&x2, &b));
        let shape = UniPoly::<Qb, X>::new(vec![bvar(), bvar(), Qb::one()]);
        assert!(eisenstein_check(&shape, &b));
        let non_poly = UniPoly::<Qb, X>::new(vec![bvar().inv().unwrap(), Qb::one()]);
        assert!(!eisenstein_check(&non_poly, &b));
    }

    #[test]
    fn closed_form_a1_and_a3() {
        let cf = closed_forms();
        assert_eq!(cf.a[1], lin(&[(-2, 0), (22, 0), (2, 0)]));
        assert_eq!(cf.prefactor, five_minus_alpha_over_100() * cf.a[1].clone());
    }

    #[test]
    fn full_pipeline() {
        let p = run(AlphaSign::Plus).unwrap();
        for c in &p.checks {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn conjugate_pipeline() {
        let p = run(AlphaSign::Minus).unwrap();
        for c in &p.checks {
            assert!(c.passed, "{c}");
        }
        assert_eq!(p.data.a1, build_g(AlphaSign::Minus).coeff(4));
    }
}
