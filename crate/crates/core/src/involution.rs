//! Conjugate-linear anti-involutions of the algebra and the diagonal
//! unitary-form solver for the trivial-extension modules.
//!
//! Two families are supported. With unit-circle scalar c and real (plus) or
//! unit-circle (minus) alpha:
//!
//! ```text
//! plus:  theta(L_k) = a^k L_{-k} + k a^{k-1} b1L I_{-k} + k a^{k-1} d1L H_{-k}
//!        theta(I_k) = a^k c^2 I_{-k}
//!        theta(G_k) = a^k c G_{-k} + (a^k d0G + 2k a^{k-1} b1L c) H_{-k}
//!        theta(H_k) = a^k c^3 H_{-k}
//! minus: theta(L_k) = -a^k L_k + k a^{k-1} b1L I_k + k a^{k-1} d1L H_k
//!        theta(I_k) = a^k c^2 I_k
//!        theta(G_k) = a^k c G_k + (a^k d0G - 2k a^{k-1} b1L c) H_k
//!        theta(H_k) = -a^k c^3 H_k
//! ```
//!
//! The free parameters obey exact phase constraints (see [`InvolutionSpec::validate`]);
//! note that theta^2 = id forces d0G*conj(c0G)^2 to be purely imaginary in the
//! plus family and d1L^2*conj(alpha^2 c0G^3) to be non-positive in the minus
//! family, which the axiom checker verifies computationally.

use crate::algebra::{gen, Element, Family, GeneratorId, ViolationRecord, FAMILIES};
use crate::repmod::{act, ModuleVector, SuperModuleSpec};
use crate::scalar::Scalar;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Plus,
    Minus,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Plus => write!(f, "plus"),
            Variant::Minus => write!(f, "minus"),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum InvolutionError {
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("delta must be 0 or 1, found {0}")]
    BadDelta(u8),
}

#[derive(Debug, Error)]
pub enum SpecFileError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("missing required key {0:?}")]
    MissingKey(&'static str),
    #[error(transparent)]
    Invalid(#[from] InvolutionError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One anti-involution: a variant plus its scalar parameters.
#[derive(Clone, Debug)]
pub struct InvolutionSpec {
    variant: Variant,
    alpha: Scalar,
    c0g: Scalar,
    b1l: Scalar,
    d1l: Scalar,
    d0g: Scalar,
    delta: u8,
}

impl InvolutionSpec {
    pub fn new(
        variant: Variant,
        alpha: Scalar,
        c0g: Scalar,
        b1l: Scalar,
        d1l: Scalar,
        d0g: Scalar,
        delta: u8,
    ) -> Result<Self, InvolutionError> {
        if alpha.is_zero() {
            return Err(InvolutionError::ZeroAlpha);
        }
        if delta > 1 {
            return Err(InvolutionError::BadDelta(delta));
        }
        Ok(InvolutionSpec {
            variant,
            alpha,
            c0g,
            b1l,
            d1l,
            d0g,
            delta,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn c0g(&self) -> &Scalar {
        &self.c0g
    }

    pub fn b1l(&self) -> &Scalar {
        &self.b1l
    }

    pub fn d1l(&self) -> &Scalar {
        &self.d1l
    }

    pub fn d0g(&self) -> &Scalar {
        &self.d0g
    }

    pub fn delta(&self) -> u8 {
        self.delta
    }

    pub fn params_echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("variant".into(), self.variant.to_string());
        m.insert("alpha".into(), self.alpha.to_string());
        m.insert("c0G".into(), self.c0g.to_string());
        m.insert("b1L".into(), self.b1l.to_string());
        m.insert("d1L".into(), self.d1l.to_string());
        m.insert("d0G".into(), self.d0g.to_string());
        m.insert("delta".into(), self.delta.to_string());
        m
    }

    /// Exact phase-constraint validation. Empty result means the parameters
    /// satisfy every constraint of their family; each entry names one
    /// violated constraint.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let c = &self.c0g;
        let one = Scalar::one();
        let sign_ok = |z: &Scalar, delta: u8| -> bool {
            // z in (-1)^delta * R>=0
            z.is_real()
                && (if delta == 0 {
                    !z.re().is_negative()
                } else {
                    !z.re().is_positive()
                })
        };
        match self.variant {
            Variant::Plus => {
                if !self.alpha.is_real() {
                    out.push("alpha must be real for the plus family".into());
                }
                if c.norm_sqr() != *one.re() {
                    out.push("c0G must lie on the unit circle".into());
                }
                let zb = &self.b1l * &c.conj();
                if !sign_ok(&zb, self.delta) {
                    out.push("b1L*conj(c0G) must lie in (-1)^delta * R>=0".into());
                }
                let zd = &(&self.d1l * &self.d1l) * &c.conj().checked_pow(3).unwrap();
                if !sign_ok(&zd, 0) {
                    out.push("d1L^2*conj(c0G)^3 must lie in R>=0".into());
                }
                let zg = &self.d0g * &c.conj().checked_pow(2).unwrap();
                let imag_ok = zg.re().is_zero()
                    && (if self.delta == 0 {
                        !zg.im().is_negative()
                    } else {
                        !zg.im().is_positive()
                    });
                if !imag_ok {
                    out.push("d0G*conj(c0G)^2 must lie in (-1)^delta * i * R>=0".into());
                }
            }
            Variant::Minus => {
                if self.alpha.norm_sqr() != *one.re() {
                    out.push("alpha must lie on the unit circle".into());
                }
                if c.norm_sqr() != *one.re() {
                    out.push("c0G must lie on the unit circle".into());
                }
                let zb = &self.b1l * &(&self.alpha * c).conj();
                if !sign_ok(&zb, self.delta) {
                    out.push("b1L*conj(alpha*c0G) must lie in (-1)^delta * R>=0".into());
                }
                let zd = &(&self.d1l * &self.d1l)
                    * &(&self.alpha.checked_pow(2).unwrap() * &c.checked_pow(3).unwrap()).conj();
                if !(zd.is_real() && !zd.re().is_positive()) {
                    out.push("d1L^2*conj(alpha^2*c0G^3) must lie in R<=0".into());
                }
                let zg = &self.d0g * &c.conj().checked_pow(2).unwrap();
                if !sign_ok(&zg, self.delta) {
                    out.push("d0G*conj(c0G)^2 must lie in (-1)^delta * R>=0".into());
                }
            }
        }
        out
    }

    /// Image of a single generator.
    pub fn theta_generator(&self, g: GeneratorId) -> Element {
        let k = g.degree;
        let a_k = self.alpha.checked_pow(k).expect("alpha nonzero");
        let a_km1 = self.alpha.checked_pow(k - 1).expect("alpha nonzero");
        let kk = Scalar::from_int(k);
        let c = &self.c0g;
        let mut e = Element::zero();
        match self.variant {
            Variant::Plus => match g.family {
                Family::L => {
                    e.add_term(gen(Family::L, -k), a_k.clone());
                    e.add_term(gen(Family::I, -k), &(&kk * &a_km1) * &self.b1l);
                    e.add_term(gen(Family::H, -k), &(&kk * &a_km1) * &self.d1l);
                }
                Family::I => {
                    e.add_term(gen(Family::I, -k), &a_k * &(c * c));
                }
                Family::G => {
                    e.add_term(gen(Family::G, -k), &a_k * c);
                    let cross = &(&Scalar::from_int(2 * k) * &a_km1) * &(&self.b1l * c);
                    e.add_term(gen(Family::H, -k), &(&a_k * &self.d0g) + &cross);
                }
                Family::H => {
                    e.add_term(gen(Family::H, -k), &a_k * &c.checked_pow(3).unwrap());
                }
            },
            Variant::Minus => match g.family {
                Family::L => {
                    e.add_term(gen(Family::L, k), -&a_k);
                    e.add_term(gen(Family::I, k), &(&kk * &a_km1) * &self.b1l);
                    e.add_term(gen(Family::H, k), &(&kk * &a_km1) * &self.d1l);
                }
                Family::I => {
                    e.add_term(gen(Family::I, k), &a_k * &(c * c));
                }
                Family::G => {
                    e.add_term(gen(Family::G, k), &a_k * c);
                    let cross = &(&Scalar::from_int(2 * k) * &a_km1) * &(&self.b1l * c);
                    e.add_term(gen(Family::H, k), &(&a_k * &self.d0g) - &cross);
                }
                Family::H => {
                    e.add_term(gen(Family::H, k), -&(&a_k * &c.checked_pow(3).unwrap()));
                }
            },
        }
        e
    }

    /// Conjugate-linear extension: theta(s*x) = conj(s)*theta(x).
    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (g, coef) in x.terms() {
            let image = self.theta_generator(*g).scale(&coef.conj());
            out = out.add(&image);
        }
        out
    }

    /// Key-value text format: `variant=plus|minus`, `alpha=`, `c0G=`, `b1L=`,
    /// `d1L=`, `d0G=`, `delta=0|1`. Missing scalar parameters default to 0,
    /// c0G defaults to 1, delta to 0. Blank lines and `#` comments allowed.
    pub fn parse(text: &str) -> Result<Self, SpecFileError> {
        let mut fields: BTreeMap<String, String> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once('=') else {
                return Err(SpecFileError::Malformed {
                    line,
                    msg: format!("expected 'key=value', found {:?}", raw),
                });
            };
            fields.insert(key.trim().to_string(), value.trim().to_string());
        }
        let variant = match fields.get("variant").map(String::as_str) {
            Some("plus") => Variant::Plus,
            Some("minus") => Variant::Minus,
            Some(other) => {
                return Err(SpecFileError::Malformed {
                    line: 0,
                    msg: format!("variant must be 'plus' or 'minus', found {:?}", other),
                })
            }
            None => return Err(SpecFileError::MissingKey("variant")),
        };
        let scalar = |key: &'static str, default: Scalar| -> Result<Scalar, SpecFileError> {
            match fields.get(key) {
                None => Ok(default),
                Some(text) => Scalar::from_str(text).map_err(|e| SpecFileError::Malformed {
                    line: 0,
                    msg: format!("bad scalar for {}: {}", key, e),
                }),
            }
        };
        let alpha = match fields.get("alpha") {
            None => return Err(SpecFileError::MissingKey("alpha")),
            Some(text) => Scalar::from_str(text).map_err(|e| SpecFileError::Malformed {
                line: 0,
                msg: format!("bad scalar for alpha: {}", e),
            })?,
        };
        let c0g = scalar("c0G", Scalar::one())?;
        let b1l = scalar("b1L", Scalar::zero())?;
        let d1l = scalar("d1L", Scalar::zero())?;
        let d0g = scalar("d0G", Scalar::zero())?;
        let delta: u8 = match fields.get("delta") {
            None => 0,
            Some(text) => text.parse().map_err(|_| SpecFileError::Malformed {
                line: 0,
                msg: format!("delta must be 0 or 1, found {:?}", text),
            })?,
        };
        Ok(InvolutionSpec::new(
            variant, alpha, c0g, b1l, d1l, d0g, delta,
        )?)
    }

    pub fn load(path: &Path) -> Result<Self, SpecFileError> {
        let text = std::fs::read_to_string(path)?;
        InvolutionSpec::parse(&text)
    }
}

#[derive(Clone, Debug)]
pub struct InvolutionReport {
    pub window: i64,
    pub checked: usize,
    pub violations: Vec<ViolationRecord>,
    pub constraint_violations: Vec<String>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the anti-involution axioms on the window:
/// C3 `theta([x,y]) = [theta(y), theta(x)]` on all basis pairs,
/// C4 `theta^2 = id` on all window generators, C1/C2 on fixed sample
/// elements, plus ideal preservation (no L-component in the images of I, G,
/// H), `theta(L_0) in span{L_0}`, and the Virasoro shape of the L-component
/// of `theta(L_m)`.
pub fn axiom_check(spec: &InvolutionSpec, n: i64) -> InvolutionReport {
    assert!(n >= 2);
    let table = crate::algebra::BracketTable::standard();
    let mut violations = Vec::new();
    let mut checked = 0usize;
    let gens: Vec<GeneratorId> = FAMILIES
        .iter()
        .flat_map(|&f| (-n..=n).map(move |d| gen(f, d)))
        .collect();

    for &x in &gens {
        for &y in &gens {
            checked += 1;
            let lhs = spec.apply(&table.bracket(&Element::generator(x), &Element::generator(y)));
            let rhs = table.bracket(&spec.theta_generator(y), &spec.theta_generator(x));
            if lhs != rhs {
                violations.push(ViolationRecord {
                    relation: format!("C3({},{})", x, y),
                    indices: vec![x.degree, y.degree],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }

    for &x in &gens {
        checked += 1;
        let twice = spec.apply(&spec.theta_generator(x));
        let expected = Element::generator(x);
        if twice != expected {
            violations.push(ViolationRecord {
                relation: format!("C4({})", x),
                indices: vec![x.degree],
                lhs: twice.to_string(),
                rhs: expected.to_string(),
            });
        }
    }

    // C1/C2 on fixed sample elements (theta is conjugate-linear by
    // construction; these are regression spot checks).
    let samples: Vec<Element> = vec![
        "L[1] + (1/2)*I[-1]".parse().unwrap(),
        "(0+1i)*G[0] - H[2]".parse().unwrap(),
        "L[0] + G[1] + (3/5+4/5i)*H[-1]".parse().unwrap(),
    ];
    let scalars: Vec<Scalar> = vec![
        Scalar::i(),
        Scalar::ratio(2, 3),
        "3/5+4/5i".parse().unwrap(),
    ];
    for (idx, e1) in samples.iter().enumerate() {
        for e2 in &samples {
            checked += 1;
            let lhs = spec.apply(&e1.add(e2));
            let rhs = spec.apply(e1).add(&spec.apply(e2));
            if lhs != rhs {
                violations.push(ViolationRecord {
                    relation: "C1".into(),
                    indices: vec![idx as i64],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        for s in &scalars {
            checked += 1;
            let lhs = spec.apply(&e1.scale(s));
            let rhs = spec.apply(e1).scale(&s.conj());
            if lhs != rhs {
                violations.push(ViolationRecord {
                    relation: "C2".into(),
                    indices: vec![idx as i64],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }

    // theta preserves the ideal spanned by I, G, H and the Cartan direction.
    for &x in &gens {
        if x.family == Family::L {
            continue;
        }
        checked += 1;
        let image = spec.theta_generator(x);
        if image.terms().any(|(g, _)| g.family == Family::L) {
            violations.push(ViolationRecord {
                relation: format!("ideal({})", x),
                indices: vec![x.degree],
                lhs: image.to_string(),
                rhs: "an element of span{I,G,H}".into(),
            });
        }
    }
    let l0 = spec.theta_generator(gen(Family::L, 0));
    checked += 1;
    if l0.terms().any(|(g, _)| *g != gen(Family::L, 0)) {
        violations.push(ViolationRecord {
            relation: "cartan(L[0])".into(),
            indices: vec![0],
            lhs: l0.to_string(),
            rhs: "an element of span{L[0]}".into(),
        });
    }

    // Modulo the ideal, theta restricted to span{L_m} is the classical
    // Virasoro anti-involution of the matching sign family.
    for &x in &gens {
        if x.family != Family::L {
            continue;
        }
        checked += 1;
        let image = spec.theta_generator(x);
        let a_k = spec.alpha.checked_pow(x.degree).expect("alpha nonzero");
        let (target, coef) = match spec.variant {
            Variant::Plus => (gen(Family::L, -x.degree), a_k),
            Variant::Minus => (gen(Family::L, x.degree), -&a_k),
        };
        let l_part: Vec<_> = image
            .terms()
            .filter(|(g, _)| g.family == Family::L)
            .collect();
        let ok = l_part.len() == 1 && *l_part[0].0 == target && *l_part[0].1 == coef;
        if !ok {
            violations.push(ViolationRecord {
                relation: format!("virasoro-projection({})", x),
                indices: vec![x.degree],
                lhs: image.to_string(),
                rhs: format!("L-component {}*{}", coef, target),
            });
        }
    }

    InvolutionReport {
        window: n,
        checked,
        violations,
        constraint_violations: spec.validate(),
    }
}

/// Diagonal Hermitian-form weights for the trivial extension of A_{a,b}.
#[derive(Clone, Debug)]
pub struct FormWeights {
    pub window: i64,
    pub weights: BTreeMap<i64, Scalar>,
    pub notes: Vec<String>,
}

impl FormWeights {
    pub fn all_one(&self) -> bool {
        self.weights.values().all(Scalar::is_one)
    }
}

#[derive(Clone, Debug)]
pub struct UnitaryWitness {
    pub m: i64,
    pub j: i64,
    pub lhs: String,
    pub rhs: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum UnitaryOutcome {
    Weights(FormWeights),
    Infeasible(UnitaryWitness),
}

/// Seeks diagonal weights w_j > 0 with w_0 = 1 realizing
/// `<x u, v> = <u, theta(x) v>` on the trivial extension of A_{a,b} (the form
/// is linear in the first argument, conjugate-linear in the second). Only the
/// L-adjointness equations are non-vacuous:
/// `(a-j+mb) w_{m+j} = conj(coeff of u_j in theta(L_m) u_{m+j}) w_j`.
/// Returns the weights or the first violated (m, j) equation.
pub fn unitary_weights(spec: &InvolutionSpec, a: &Scalar, b: &Scalar, n: i64) -> UnitaryOutcome {
    assert!(n >= 1);
    let module = SuperModuleSpec::trivial_extension(a.clone(), b.clone(), 3 * n);

    struct Equation {
        m: i64,
        j: i64,
        lhs_coeff: Scalar,
        rhs_coeff: Scalar,
        ratio: Option<Scalar>,
    }

    let mut equations = Vec::new();
    for m in -n..=n {
        let theta_lm = spec.theta_generator(gen(Family::L, m));
        for j in -n..=n {
            if (m + j).abs() > n {
                continue;
            }
            let lhs_coeff = module.even.l_coeff(m, j);
            let image = act(&theta_lm, &ModuleVector::u(m + j), &module)
                .expect("table radius covers all lookups");
            let rhs_coeff = image.even_coefficient(j).conj();
            let witness = |reason: &str| UnitaryWitness {
                m,
                j,
                lhs: format!("({})*w[{}]", lhs_coeff, m + j),
                rhs: format!("({})*w[{}]", rhs_coeff, j),
                reason: reason.into(),
            };
            match (lhs_coeff.is_zero(), rhs_coeff.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => {
                    return UnitaryOutcome::Infeasible(witness(
                        "exactly one side of the adjointness equation vanishes",
                    ));
                }
                (false, false) => {
                    let ratio = rhs_coeff.checked_div(&lhs_coeff).expect("nonzero");
                    if !ratio.is_positive_real() {
                        return UnitaryOutcome::Infeasible(witness(
                            "weight ratio is not a positive real",
                        ));
                    }
                    equations.push(Equation {
                        m,
                        j,
                        lhs_coeff,
                        rhs_coeff,
                        ratio: Some(ratio),
                    });
                }
            }
        }
    }

    let mut weights: BTreeMap<i64, Scalar> = BTreeMap::new();
    weights.insert(0, Scalar::one());
    loop {
        let mut progress = false;
        for eq in &equations {
            let ratio = eq.ratio.as_ref().unwrap();
            let src = weights.get(&eq.j).cloned();
            let dst = weights.get(&(eq.m + eq.j)).cloned();
            match (src, dst) {
                (Some(wj), None) => {
                    weights.insert(eq.m + eq.j, ratio * &wj);
                    progress = true;
                }
                (None, Some(wmj)) => {
                    weights.insert(eq.j, wmj.checked_div(ratio).expect("ratio nonzero"));
                    progress = true;
                }
                (Some(wj), Some(wmj)) => {
                    if &eq.lhs_coeff * &wmj != &eq.rhs_coeff * &wj {
                        return UnitaryOutcome::Infeasible(UnitaryWitness {
                            m: eq.m,
                            j: eq.j,
                            lhs: format!("({})*{}", eq.lhs_coeff, wmj),
                            rhs: format!("({})*{}", eq.rhs_coeff, wj),
                            reason: "inconsistent weight values along two paths".into(),
                        });
                    }
                }
                (None, None) => {}
            }
        }
        if !progress {
            break;
        }
    }

    let mut notes = Vec::new();
    for j in -n..=n {
        if let std::collections::btree_map::Entry::Vacant(slot) = weights.entry(j) {
            slot.insert(Scalar::one());
            notes.push(format!("w[{}] unconstrained on the window; set to 1", j));
        }
    }

    // Post-hoc exact verification of every equation.
    for eq in &equations {
        let wj = &weights[&eq.j];
        let wmj = &weights[&(eq.m + eq.j)];
        if &eq.lhs_coeff * wmj != &eq.rhs_coeff * wj {
            return UnitaryOutcome::Infeasible(UnitaryWitness {
                m: eq.m,
                j: eq.j,
                lhs: format!("({})*{}", eq.lhs_coeff, wmj),
                rhs: format!("({})*{}", eq.rhs_coeff, wj),
                reason: "post-hoc verification failed".into(),
            });
        }
    }

    UnitaryOutcome::Weights(FormWeights {
        window: n,
        weights,
        notes,
    })
}
