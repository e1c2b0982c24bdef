//! Primitive idempotents of R_{q,n} and the decomposition of ring elements
//! into their simple components.

use crate::error::{Error, Result};
use crate::fields::{arith, linalg};
use crate::polyring::{
    cyclotomic_cosets, factor_xn_minus_1, CyclotomicCoset, Poly, RingElement, RingSpec,
};

/// One simple component: its coset, irreducible factor f_i and idempotent e_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub coset: CyclotomicCoset,
    pub factor: Poly,
    pub idempotent: RingElement,
    pub degree: usize,
}

/// The complete set of orthogonal primitive idempotents of R_{q,n}, in coset
/// order (the component of {0} first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentBasis {
    spec: RingSpec,
    components: Vec<Component>,
}

impl IdempotentBasis {
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number t of simple components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn idempotents(&self) -> impl Iterator<Item = &RingElement> {
        self.components.iter().map(|c| &c.idempotent)
    }

    pub fn idempotent(&self, i: usize) -> &RingElement {
        &self.components[i].idempotent
    }

    /// Every idempotent of the ring as a subset sum of the basis, indexed by
    /// the bitmask of included components. Only sensible for small t.
    pub fn all_idempotents(&self) -> Result<Vec<RingElement>> {
        let t = self.len();
        if t > 20 {
            return Err(Error::TooLarge {
                size: format!("2^{t}"),
                cap: 1 << 20,
            });
        }
        (0u32..1 << t)
            .map(|mask| {
                self.components
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .try_fold(self.spec.zero(), |acc, (_, c)| acc.add(&c.idempotent))
            })
            .collect()
    }

    fn check_spec(&self, f: &RingElement) -> Result<()> {
        if f.spec() == &self.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Asserts orthogonality, sum-to-one, idempotence and the component count.
    fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InternalError(msg));
        if self.len() != cyclotomic_cosets(&self.spec).len() {
            return fail("component count differs from coset count".into());
        }
        let mut sum = self.spec.zero();
        for (i, a) in self.components.iter().enumerate() {
            if !a.idempotent.is_idempotent() {
                return fail(format!("e_{i} is not idempotent"));
            }
            for (j, b) in self.components.iter().enumerate().skip(i + 1) {
                if !a.idempotent.mul(&b.idempotent)?.is_zero() {
                    return fail(format!("e_{i} e_{j} is nonzero"));
                }
            }
            sum = sum.add(&a.idempotent)?;
        }
        if !sum.is_one() {
            return fail("idempotents do not sum to 1".into());
        }
        Ok(())
    }
}

/// Entries f_i of the decomposition f = Σ f_i e_i, aligned with a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVector {
    spec: RingSpec,
    entries: Vec<RingElement>,
}

impl ComponentVector {
    pub fn new(spec: &RingSpec, entries: Vec<RingElement>) -> Result<Self> {
        if entries.iter().any(|e| e.spec() != spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(ComponentVector {
            spec: spec.clone(),
            entries,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// CRT construction: e_i = (h_i^{-1} mod f_i)·h_i with h_i = (x^n − 1)/f_i.
pub fn primitive_idempotents(spec: &RingSpec) -> Result<IdempotentBasis> {
    let modulus = spec.modulus();
    let mut components = Vec::new();
    for (coset, factor) in factor_xn_minus_1(spec)? {
        let (h, r) = modulus.div_rem(&factor)?;
        if !r.is_zero() {
            return Err(Error::InternalError("factor does not divide x^n - 1".into()));
        }
        let u = h.rem(&factor)?.inv_mod(&factor)?;
        let idempotent = spec.element_from_poly(&u.mul(&h)?)?;
        components.push(Component {
            degree: coset.size(),
            coset,
            factor,
            idempotent,
        });
    }
    let basis = IdempotentBasis {
        spec: spec.clone(),
        components,
    };
    basis.verify()?;
    Ok(basis)
}

/// Whether the closed-form idempotents for n = p^m are primitive:
/// p = 2 with (m = 1, q odd) or (m = 2, q ≡ 3 mod 4), or p odd with q
/// generating the units mod p^m.
pub fn closed_form_is_primitive(p: u64, m: u32, q: u64) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::BadInput(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::BadInput("m must be at least 1".into()));
    }
    if arith::gcd(p, q) != 1 {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    if p == 2 {
        return Ok((m == 1 && q % 2 == 1) || (m == 2 && q % 4 == 3));
    }
    let pm = p.pow(m);
    Ok(arith::integer_order_mod(q, pm)? == arith::euler_phi(pm))
}

/// Closed-form idempotents for n = p^m: e_0 = Ĉ_0 and e_i = Ĉ_i − Ĉ_{i−1},
/// where Ĉ_i = p^{−(m−i)} Σ_{j<p^{m−i}} x^{j p^i}.
pub fn closed_form_pm(spec: &RingSpec, p: u64, m: u32) -> Result<IdempotentBasis> {
    if p.checked_pow(m) != Some(spec.n() as u64) {
        return Err(Error::BadInput(format!(
            "n = {} is not {p}^{m}",
            spec.n()
        )));
    }
    let q = spec.base().q() as u64;
    if !closed_form_is_primitive(p, m, q)? {
        return Err(Error::ConditionNotMet(format!(
            "p = {p}, m = {m}, q = {q}"
        )));
    }
    let f = spec.base();
    let n = spec.n();
    let hat = |i: u32| -> Result<RingElement> {
        let len = p.pow(m - i) as usize;
        let c = f.inv(f.from_int(len as i64))?;
        let step = p.pow(i) as usize;
        let mut v = vec![0; n];
        for j in 0..len {
            v[j * step] = c;
        }
        RingElement::new(spec, &v)
    };
    let hats = (0..=m).map(hat).collect::<Result<Vec<_>>>()?;

    let cosets = cyclotomic_cosets(spec);
    if cosets.len() != m as usize + 1 {
        return Err(Error::InternalError("unexpected coset count".into()));
    }
    let mut components = Vec::new();
    for (i, coset) in cosets.into_iter().enumerate() {
        let (idempotent, factor) = if i == 0 {
            (hats[0].clone(), Poly::from_raw(f, vec![f.neg(1), 1]))
        } else {
            // Φ_{p^i}(x) = Σ_{j<p} x^{j p^{i−1}}.
            let step = p.pow(i as u32 - 1) as usize;
            let mut phi = vec![0; step * (p as usize - 1) + 1];
            for j in 0..p as usize {
                phi[j * step] = 1;
            }
            (hats[i].sub(&hats[i - 1])?, Poly::from_raw(f, phi))
        };
        components.push(Component {
            degree: coset.size(),
            coset,
            factor,
            idempotent,
        });
    }
    let basis = IdempotentBasis {
        spec: spec.clone(),
        components,
    };
    basis.verify()?;
    Ok(basis)
}

/// Entry i is f mod f_i, lifted to R_{q,n}.
pub fn project(f: &RingElement, basis: &IdempotentBasis) -> Result<ComponentVector> {
    basis.check_spec(f)?;
    let spec = basis.spec();
    let fp = f.to_poly();
    let entries = basis
        .components
        .iter()
        .map(|c| spec.element_from_poly(&fp.rem(&c.factor)?))
        .collect::<Result<Vec<_>>>()?;
    ComponentVector::new(spec, entries)
}

/// Σ v_i e_i.
pub fn reconstruct(v: &ComponentVector, basis: &IdempotentBasis) -> Result<RingElement> {
    if v.len() != basis.len() {
        return Err(Error::LengthMismatch {
            expected: basis.len(),
            got: v.len(),
        });
    }
    if v.spec() != basis.spec() {
        return Err(Error::SpecMismatch);
    }
    v.entries
        .iter()
        .zip(basis.idempotents())
        .try_fold(basis.spec.zero(), |acc, (fi, ei)| acc.add(&fi.mul(ei)?))
}

/// Inverts every entry in its component (modulo f_i).
pub fn invert_components(v: &ComponentVector, basis: &IdempotentBasis) -> Result<ComponentVector> {
    if v.len() != basis.len() {
        return Err(Error::LengthMismatch {
            expected: basis.len(),
            got: v.len(),
        });
    }
    let spec = basis.spec();
    let entries = v
        .entries
        .iter()
        .zip(&basis.components)
        .map(|(fi, c)| {
            let r = fi.to_poly().rem(&c.factor)?;
            if r.is_zero() {
                return Err(Error::NotAUnit);
            }
            spec.element_from_poly(&r.inv_mod(&c.factor)?)
        })
        .collect::<Result<Vec<_>>>()?;
    ComponentVector::new(spec, entries)
}

pub fn is_idempotent(f: &RingElement) -> bool {
    f.is_idempotent()
}

/// True iff f is exactly one of the basis idempotents.
pub fn is_primitive_idempotent(f: &RingElement, basis: &IdempotentBasis) -> bool {
    basis.idempotents().any(|e| e == f)
}

/// Dimension over F_q of the ideal generated by f: rank of {x^k f}.
pub fn ideal_dimension(f: &RingElement) -> usize {
    let rows: Vec<Vec<u32>> = (0..f.spec().n())
        .map(|k| f.shift_mul_x(k).coeffs().to_vec())
        .collect();
    linalg::rank(f.spec().base(), &rows)
}
