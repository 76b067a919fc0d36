//! Weight modules with one-dimensional weight spaces in each parity.
//!
//! The even and odd parts each carry one of the classical Virasoro actions
//! A_{a,b}, A(alpha), B(beta) on bases {u_k} / {v_k}; the remaining
//! generators act through a sampled coefficient table:
//!
//! ```text
//! I_i u_j = f(i,j) u_{i+j}     I_i v_j = ft(i,j) v_{i+j}
//! G_i u_j = g(i,j) v_{i+j}     G_i v_j = gt(i,j) u_{i+j}
//! H_i u_j = h(i,j) v_{i+j}     H_i v_j = ht(i,j) u_{i+j}
//! ```
//!
//! The trivial extension (all six tables zero) makes any Virasoro module a
//! module for the whole superalgebra.

use crate::algebra::{Element, Family};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

/// Which of the three Virasoro intermediate-series actions drives L.
///
/// ```text
/// Aab:    L_i u_j = (a - j + i b) u_{i+j}
/// Aalpha: L_i u_j = -(i+j) u_{i+j} (j != 0),  L_i u_0 = -i(1+(i+1)alpha) u_i
/// Bbeta:  L_i u_j = -j u_{i+j} (i+j != 0),    L_i u_{-i} = i(1+(i+1)beta) u_0
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VirasoroFamily {
    Aab { a: Scalar, b: Scalar },
    Aalpha { alpha: Scalar },
    Bbeta { beta: Scalar },
}

impl VirasoroFamily {
    pub fn aab(a: Scalar, b: Scalar) -> Self {
        VirasoroFamily::Aab { a, b }
    }

    /// Coefficient of `u_{i+j}` in `L_i u_j`.
    pub fn l_coeff(&self, i: i64, j: i64) -> Scalar {
        match self {
            VirasoroFamily::Aab { a, b } => {
                &(a - &Scalar::from_int(j)) + &(&Scalar::from_int(i) * b)
            }
            VirasoroFamily::Aalpha { alpha } => {
                if j != 0 {
                    Scalar::from_int(-(i + j))
                } else {
                    let bump = &Scalar::one() + &(&Scalar::from_int(i + 1) * alpha);
                    &Scalar::from_int(-i) * &bump
                }
            }
            VirasoroFamily::Bbeta { beta } => {
                if i + j != 0 {
                    Scalar::from_int(-j)
                } else {
                    let bump = &Scalar::one() + &(&Scalar::from_int(i + 1) * beta);
                    &Scalar::from_int(i) * &bump
                }
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            VirasoroFamily::Aab { .. } => "Aab",
            VirasoroFamily::Aalpha { .. } => "Aalpha",
            VirasoroFamily::Bbeta { .. } => "Bbeta",
        }
    }
}

/// The six sampled action coefficients, named by which generator acts and on
/// which parity: `IEven` is the table for I on {u_k} (file token `f`), and
/// so on.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CoeffFn {
    IEven,
    IOdd,
    GEven,
    GOdd,
    HEven,
    HOdd,
}

pub const COEFF_FNS: [CoeffFn; 6] = [
    CoeffFn::IEven,
    CoeffFn::IOdd,
    CoeffFn::GEven,
    CoeffFn::GOdd,
    CoeffFn::HEven,
    CoeffFn::HOdd,
];

impl CoeffFn {
    pub fn label(self) -> &'static str {
        match self {
            CoeffFn::IEven => "f",
            CoeffFn::IOdd => "ft",
            CoeffFn::GEven => "g",
            CoeffFn::GOdd => "gt",
            CoeffFn::HEven => "h",
            CoeffFn::HOdd => "ht",
        }
    }

    pub fn from_label(s: &str) -> Option<CoeffFn> {
        COEFF_FNS.iter().copied().find(|f| f.label() == s)
    }

    fn index(self) -> usize {
        match self {
            CoeffFn::IEven => 0,
            CoeffFn::IOdd => 1,
            CoeffFn::GEven => 2,
            CoeffFn::GOdd => 3,
            CoeffFn::HEven => 4,
            CoeffFn::HOdd => 5,
        }
    }
}

impl fmt::Display for CoeffFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ActError {
    #[error("window exhausted: {family} table lookup ({i}, {j}) outside radius {radius}")]
    WindowExhausted {
        family: CoeffFn,
        i: i64,
        j: i64,
        radius: i64,
    },
    #[error("table window {radius} too small: need at least {needed}")]
    WindowTooSmall { radius: i64, needed: i64 },
}

#[derive(Debug, Error)]
pub enum TableLoadError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: sample ({i}, {j}) outside declared window radius {radius}")]
    OutsideWindow {
        line: usize,
        i: i64,
        j: i64,
        radius: i64,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Sampled values of the six coefficient functions on a square index window.
/// Missing entries read as zero; lookups outside the window are errors.
#[derive(Clone, Debug)]
pub struct CoefficientTable {
    radius: i64,
    samples: [BTreeMap<(i64, i64), Scalar>; 6],
}

impl CoefficientTable {
    pub fn zero(radius: i64) -> Self {
        CoefficientTable {
            radius,
            samples: Default::default(),
        }
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn set(&mut self, f: CoeffFn, i: i64, j: i64, value: Scalar) {
        assert!(
            i.abs() <= self.radius && j.abs() <= self.radius,
            "sample ({}, {}) outside window radius {}",
            i,
            j,
            self.radius
        );
        if value.is_zero() {
            self.samples[f.index()].remove(&(i, j));
        } else {
            self.samples[f.index()].insert((i, j), value);
        }
    }

    /// Fills one function from a closed form over the whole window.
    pub fn fill(&mut self, f: CoeffFn, mut rule: impl FnMut(i64, i64) -> Scalar) {
        for i in -self.radius..=self.radius {
            for j in -self.radius..=self.radius {
                self.set(f, i, j, rule(i, j));
            }
        }
    }

    pub fn lookup(&self, f: CoeffFn, i: i64, j: i64) -> Result<Scalar, ActError> {
        if i.abs() > self.radius || j.abs() > self.radius {
            return Err(ActError::WindowExhausted {
                family: f,
                i,
                j,
                radius: self.radius,
            });
        }
        Ok(self.samples[f.index()]
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Scalar::zero))
    }

    /// Parses the line-oriented text format: one sample per line,
    /// `<fn> <i> <j> <scalar>` with `<fn>` in {f, ft, g, gt, h, ht}.
    /// Blank lines and lines starting with '#' are skipped.
    pub fn parse(text: &str, radius: i64) -> Result<Self, TableLoadError> {
        let mut table = CoefficientTable::zero(radius);
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(TableLoadError::Malformed {
                    line,
                    msg: format!("expected '<fn> <i> <j> <scalar>', found {:?}", raw),
                });
            }
            let f = CoeffFn::from_label(fields[0]).ok_or_else(|| TableLoadError::Malformed {
                line,
                msg: format!("unknown coefficient function {:?}", fields[0]),
            })?;
            let i: i64 = fields[1].parse().map_err(|_| TableLoadError::Malformed {
                line,
                msg: format!("bad index {:?}", fields[1]),
            })?;
            let j: i64 = fields[2].parse().map_err(|_| TableLoadError::Malformed {
                line,
                msg: format!("bad index {:?}", fields[2]),
            })?;
            let value = Scalar::from_str(fields[3]).map_err(|e| TableLoadError::Malformed {
                line,
                msg: format!("bad scalar {:?}: {}", fields[3], e),
            })?;
            if i.abs() > radius || j.abs() > radius {
                return Err(TableLoadError::OutsideWindow { line, i, j, radius });
            }
            table.set(f, i, j, value);
        }
        Ok(table)
    }

    pub fn load(path: &Path, radius: i64) -> Result<Self, TableLoadError> {
        let text = std::fs::read_to_string(path)?;
        CoefficientTable::parse(&text, radius)
    }
}

/// A super module: Virasoro actions on both parities plus a coefficient table.
#[derive(Clone, Debug)]
pub struct SuperModuleSpec {
    pub even: VirasoroFamily,
    pub odd: VirasoroFamily,
    pub coeffs: CoefficientTable,
}

impl SuperModuleSpec {
    /// The trivial extension of A_{a,b}: I, G, H act as zero.
    pub fn trivial_extension(a: Scalar, b: Scalar, table_radius: i64) -> Self {
        SuperModuleSpec {
            even: VirasoroFamily::aab(a.clone(), b.clone()),
            odd: VirasoroFamily::aab(a, b),
            coeffs: CoefficientTable::zero(table_radius),
        }
    }

    pub fn with_zero_table(even: VirasoroFamily, odd: VirasoroFamily, table_radius: i64) -> Self {
        SuperModuleSpec {
            even,
            odd,
            coeffs: CoefficientTable::zero(table_radius),
        }
    }
}

/// Finite formal sum over the even basis {u_k} and odd basis {v_k}.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModuleVector {
    even: BTreeMap<i64, Scalar>,
    odd: BTreeMap<i64, Scalar>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    /// Basis vector u_k.
    pub fn u(k: i64) -> Self {
        let mut w = ModuleVector::zero();
        w.add_even(k, Scalar::one());
        w
    }

    /// Basis vector v_k.
    pub fn v(k: i64) -> Self {
        let mut w = ModuleVector::zero();
        w.add_odd(k, Scalar::one());
        w
    }

    pub fn add_even(&mut self, k: i64, c: Scalar) {
        add_component(&mut self.even, k, c);
    }

    pub fn add_odd(&mut self, k: i64, c: Scalar) {
        add_component(&mut self.odd, k, c);
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn even_terms(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.even.iter()
    }

    pub fn odd_terms(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.odd.iter()
    }

    pub fn even_coefficient(&self, k: i64) -> Scalar {
        self.even.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn odd_coefficient(&self, k: i64) -> Scalar {
        self.odd.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (k, c) in &other.even {
            out.add_even(*k, c.clone());
        }
        for (k, c) in &other.odd {
            out.add_odd(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero();
        }
        ModuleVector {
            even: self.even.iter().map(|(k, v)| (*k, c * v)).collect(),
            odd: self.odd.iter().map(|(k, v)| (*k, c * v)).collect(),
        }
    }
}

fn add_component(map: &mut BTreeMap<i64, Scalar>, k: i64, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k).or_insert_with(Scalar::zero);
    *slot += &c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (basis, map) in [("u", &self.even), ("v", &self.odd)] {
            for (k, c) in map {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if c.is_one() {
                    write!(f, "{}[{}]", basis, k)?;
                } else if c.is_real() {
                    write!(f, "{}*{}[{}]", c, basis, k)?;
                } else {
                    write!(f, "({})*{}[{}]", c, basis, k)?;
                }
            }
        }
        Ok(())
    }
}

fn act_generator(
    family: Family,
    i: i64,
    w: &ModuleVector,
    spec: &SuperModuleSpec,
) -> Result<ModuleVector, ActError> {
    let mut out = ModuleVector::zero();
    for (&j, c) in &w.even {
        match family {
            Family::L => out.add_even(i + j, &spec.even.l_coeff(i, j) * c),
            Family::I => out.add_even(i + j, &spec.coeffs.lookup(CoeffFn::IEven, i, j)? * c),
            Family::G => out.add_odd(i + j, &spec.coeffs.lookup(CoeffFn::GEven, i, j)? * c),
            Family::H => out.add_odd(i + j, &spec.coeffs.lookup(CoeffFn::HEven, i, j)? * c),
        }
    }
    for (&j, c) in &w.odd {
        match family {
            Family::L => out.add_odd(i + j, &spec.odd.l_coeff(i, j) * c),
            Family::I => out.add_odd(i + j, &spec.coeffs.lookup(CoeffFn::IOdd, i, j)? * c),
            Family::G => out.add_even(i + j, &spec.coeffs.lookup(CoeffFn::GOdd, i, j)? * c),
            Family::H => out.add_even(i + j, &spec.coeffs.lookup(CoeffFn::HOdd, i, j)? * c),
        }
    }
    Ok(out)
}

/// Applies an algebra element to a module vector; linear in both.
pub fn act(
    x: &Element,
    w: &ModuleVector,
    spec: &SuperModuleSpec,
) -> Result<ModuleVector, ActError> {
    let mut out = ModuleVector::zero();
    for (g, c) in x.terms() {
        let part = act_generator(g.family, g.degree, w, spec)?;
        out = out.add(&part.scale(c));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ModuleViolation {
    pub x: String,
    pub y: String,
    pub basis: String,
    pub indices: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct ModuleCheckReport {
    pub window: i64,
    pub checked: usize,
    pub violations: Vec<ModuleViolation>,
}

impl ModuleCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the graded module axiom
/// `[x,y].w = x.(y.w) - (-1)^{|x||y|} y.(x.w)`
/// for all generator pairs and basis vectors in the window. Requires the
/// coefficient table to cover radius 3N so composite lookups resolve.
pub fn module_axiom_check(spec: &SuperModuleSpec, n: i64) -> Result<ModuleCheckReport, ActError> {
    if spec.coeffs.radius() < 3 * n {
        return Err(ActError::WindowTooSmall {
            radius: spec.coeffs.radius(),
            needed: 3 * n,
        });
    }
    let table = crate::algebra::BracketTable::standard();
    let mut violations = Vec::new();
    let mut checked = 0usize;
    let gens: Vec<_> = crate::algebra::FAMILIES
        .iter()
        .flat_map(|&f| (-n..=n).map(move |d| crate::algebra::gen(f, d)))
        .collect();
    for &x in &gens {
        let ex = Element::generator(x);
        for &y in &gens {
            let ey = Element::generator(y);
            let bxy = table.bracket(&ex, &ey);
            let sign = if x.parity() == crate::algebra::Parity::Odd
                && y.parity() == crate::algebra::Parity::Odd
            {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            };
            for t in -n..=n {
                for w in [ModuleVector::u(t), ModuleVector::v(t)] {
                    checked += 1;
                    let lhs = act(&bxy, &w, spec)?;
                    let rhs = act(&ex, &act(&ey, &w, spec)?, spec)?
                        .sub(&act(&ey, &act(&ex, &w, spec)?, spec)?.scale(&sign));
                    if lhs != rhs {
                        violations.push(ModuleViolation {
                            x: x.to_string(),
                            y: y.to_string(),
                            basis: w.to_string(),
                            indices: vec![x.degree, y.degree, t],
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(ModuleCheckReport {
        window: n,
        checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gen;
    use Family::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn aab_action_examples() {
        let spec = SuperModuleSpec::trivial_extension(Scalar::zero(), Scalar::zero(), 3);
        let out = act(&Element::generator(gen(L, 1)), &ModuleVector::u(0), &spec).unwrap();
        assert!(out.is_zero());

        let spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 6);
        let out = act(&Element::generator(gen(L, 2)), &ModuleVector::u(1), &spec).unwrap();
        assert_eq!(out.even_coefficient(3), s("23/21"));
        assert_eq!(out.even_terms().count(), 1);
    }

    #[test]
    fn aalpha_action_example() {
        let spec = SuperModuleSpec::with_zero_table(
            VirasoroFamily::Aalpha {
                alpha: Scalar::one(),
            },
            VirasoroFamily::Aalpha {
                alpha: Scalar::one(),
            },
            3,
        );
        let out = act(&Element::generator(gen(L, 1)), &ModuleVector::u(0), &spec).unwrap();
        assert_eq!(out.even_coefficient(1), Scalar::from_int(-3));
    }

    #[test]
    fn bbeta_action_example() {
        let spec = SuperModuleSpec::with_zero_table(
            VirasoroFamily::Bbeta {
                beta: Scalar::zero(),
            },
            VirasoroFamily::Bbeta {
                beta: Scalar::zero(),
            },
            3,
        );
        let out = act(&Element::generator(gen(L, 2)), &ModuleVector::u(-2), &spec).unwrap();
        assert_eq!(out.even_coefficient(0), Scalar::from_int(2));
    }

    #[test]
    fn trivial_extension_kills_odd_generators() {
        let spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 4);
        let out = act(&Element::generator(gen(G, 1)), &ModuleVector::u(0), &spec).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn g_swaps_parity() {
        let mut spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 4);
        spec.coeffs.set(CoeffFn::GEven, 1, 0, Scalar::from_int(3));
        let out = act(&Element::generator(gen(G, 1)), &ModuleVector::u(0), &spec).unwrap();
        assert_eq!(out.odd_coefficient(1), Scalar::from_int(3));
        assert_eq!(out.even_terms().count(), 0);
    }

    #[test]
    fn window_exhaustion_names_the_lookup() {
        let spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 2);
        let err = act(&Element::generator(gen(I, 3)), &ModuleVector::u(0), &spec).unwrap_err();
        assert_eq!(
            err,
            ActError::WindowExhausted {
                family: CoeffFn::IEven,
                i: 3,
                j: 0,
                radius: 2
            }
        );
    }

    #[test]
    fn trivial_extension_satisfies_module_axioms() {
        let spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 9);
        let report = module_axiom_check(&spec, 3).unwrap();
        assert!(
            report.passed(),
            "violations: {:?}",
            report.violations.first()
        );
    }

    #[test]
    fn constant_f_violates_l_i_pairs() {
        let mut spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 9);
        spec.coeffs.fill(CoeffFn::IEven, |_, _| Scalar::one());
        let report = module_axiom_check(&spec, 3).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.x.starts_with('L') && v.y.starts_with('I')));
    }

    #[test]
    fn axiom_check_requires_table_radius() {
        let spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 5);
        let err = module_axiom_check(&spec, 3).unwrap_err();
        assert_eq!(
            err,
            ActError::WindowTooSmall {
                radius: 5,
                needed: 9
            }
        );
    }

    #[test]
    fn zero_vector_is_vacuous() {
        let spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 3);
        let out = act(&Element::generator(gen(L, 1)), &ModuleVector::zero(), &spec).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn table_text_round_trip() {
        let text = "# sample table\nf 1 0 2/3\ngt -1 2 0+1i\n\nh 0 0 -5\n";
        let table = CoefficientTable::parse(text, 3).unwrap();
        assert_eq!(table.lookup(CoeffFn::IEven, 1, 0).unwrap(), s("2/3"));
        assert_eq!(table.lookup(CoeffFn::GOdd, -1, 2).unwrap(), s("0+1i"));
        assert_eq!(
            table.lookup(CoeffFn::HEven, 0, 0).unwrap(),
            Scalar::from_int(-5)
        );
        assert_eq!(table.lookup(CoeffFn::IOdd, 2, 2).unwrap(), Scalar::zero());
    }

    #[test]
    fn table_rejects_bad_lines() {
        assert!(CoefficientTable::parse("f 1 0", 3).is_err());
        assert!(CoefficientTable::parse("q 1 0 1", 3).is_err());
        assert!(CoefficientTable::parse("f 9 0 1", 3).is_err());
        assert!(CoefficientTable::parse("f 1 0 x", 3).is_err());
    }

    #[test]
    fn act_is_bilinear() {
        let mut spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 6);
        spec.coeffs
            .fill(CoeffFn::GEven, |i, j| Scalar::from_int(i - j));
        spec.coeffs
            .fill(CoeffFn::IEven, |i, j| Scalar::from_int(i + 2 * j));
        let x: Element = "L[1] + 2*G[0]".parse().unwrap();
        let y: Element = "I[-1]".parse().unwrap();
        let w = ModuleVector::u(1).add(&ModuleVector::u(0).scale(&s("1/2")));
        let c = s("3/4");
        let combined = act(&x.scale(&c).add(&y), &w, &spec).unwrap();
        let split = act(&x, &w, &spec)
            .unwrap()
            .scale(&c)
            .add(&act(&y, &w, &spec).unwrap());
        assert_eq!(combined, split);
    }

    #[test]
    fn degree_additivity() {
        let mut spec = SuperModuleSpec::trivial_extension(s("2/3"), s("5/7"), 6);
        spec.coeffs.fill(CoeffFn::GEven, |_, _| Scalar::one());
        let x = Element::generator(gen(G, 2));
        let out = act(&x, &ModuleVector::u(-1), &spec).unwrap();
        assert_eq!(out.odd_coefficient(1), Scalar::one());
        assert_eq!(out.odd_terms().count(), 1);
    }
}
