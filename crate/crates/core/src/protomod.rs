//! Table-level checkers for the protomodular identities and their
//! strengthenings, plus the derived Mal'cev operation.
//!
//! Every checker scans its argument tuples in lexicographic order and, where
//! an operation index `i` is involved, tries `i = 1..n` innermost. The first
//! failure found is therefore the least one and is reported as the witness.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{table_len, tuple_at, tuple_index, ProtomodularFrame, Tuples};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Protomodular,
    RightCancellable,
    Strict,
    Consociative,
    OneAssociative,
    MalcevAssociative,
    SimplifiedII,
    SimplifiedIII,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Protomodular,
        Property::RightCancellable,
        Property::Strict,
        Property::Consociative,
        Property::OneAssociative,
        Property::MalcevAssociative,
        Property::SimplifiedII,
        Property::SimplifiedIII,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Property::Protomodular => "protomodular",
            Property::RightCancellable => "right-cancellable",
            Property::Strict => "strict",
            Property::Consociative => "consociative",
            Property::OneAssociative => "1-assoc",
            Property::MalcevAssociative => "malcev-assoc",
            Property::SimplifiedII => "simplified-ii",
            Property::SimplifiedIII => "simplified-iii",
        }
    }

    /// Parses a comma separated label list; empty items are skipped.
    pub fn parse_list(s: &str) -> Result<Vec<Property>> {
        s.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.label() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The identity that failed, in words.
    pub law: String,
    /// 1-based operation index, for laws quantified over `i`.
    pub index: Option<usize>,
    pub assignment: Vec<(String, usize)>,
}

impl Witness {
    fn new(law: impl Into<String>, index: Option<usize>, assignment: Vec<(String, usize)>) -> Self {
        Witness {
            law: law.into(),
            index,
            assignment,
        }
    }

    pub fn values(&self) -> Vec<usize> {
        self.assignment.iter().map(|(_, v)| *v).collect()
    }

    /// Value assigned to `name`, if present.
    pub fn get(&self, name: &str) -> Option<usize> {
        self.assignment
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.law)?;
        if let Some(i) = self.index {
            write!(f, " i={i}")?;
        }
        for (name, v) in &self.assignment {
            write!(f, " {name}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Only for [`Property::Strict`]: whether every `theta_b : A^n -> A` is a
    /// bijection.
    pub sections_bijective: Option<bool>,
}

impl CheckReport {
    fn from_witness(property: Property, witness: Option<Witness>) -> Self {
        CheckReport {
            property,
            holds: witness.is_none(),
            witness,
            sections_bijective: None,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.property)?;
        match &self.witness {
            None => write!(f, "holds")?,
            Some(w) => write!(f, "FAILS ({w})")?,
        }
        if let Some(b) = self.sections_bijective {
            write!(f, " [theta_b bijective: {}]", if b { "yes" } else { "no" })?;
        }
        Ok(())
    }
}

fn named(prefix: &str, values: &[usize]) -> Vec<(String, usize)> {
    values
        .iter()
        .enumerate()
        .map(|(j, &v)| (format!("{prefix}{}", j + 1), v))
        .collect()
}

/// Identities `alpha_i(a, a) = e_i` and `theta(alpha_1(a,b), .., alpha_n(a,b), b) = a`.
pub fn check_protomodular(frame: &ProtomodularFrame) -> CheckReport {
    let k = frame.size();
    let n = frame.n();
    for a in 0..k {
        for i in 0..n {
            if frame.alpha(i, a, a) != frame.unit(i) {
                let w = Witness::new("alpha_i(a, a) = e_i", Some(i + 1), vec![("a".into(), a)]);
                return CheckReport::from_witness(Property::Protomodular, Some(w));
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            if frame.theta(&frame.alphas(a, b), b) != a {
                let w = Witness::new(
                    "theta(alpha_1(a, b), .., alpha_n(a, b), b) = a",
                    None,
                    vec![("a".into(), a), ("b".into(), b)],
                );
                return CheckReport::from_witness(Property::Protomodular, Some(w));
            }
        }
    }
    CheckReport::from_witness(Property::Protomodular, None)
}

/// `alpha_i(theta(a, b), theta(a', b)) = alpha_i(theta(a, b'), theta(a', b'))`
/// for all tuples `a, a'` and points `b, b'`.
pub fn check_right_cancellable(frame: &ProtomodularFrame) -> CheckReport {
    let k = frame.size();
    let n = frame.n();
    let rows = frame.tuple_count();
    for r in 0..rows {
        for r2 in 0..rows {
            for b in 0..k {
                for b2 in 0..k {
                    for i in 0..n {
                        let lhs = frame.alpha(i, frame.theta_row(r, b), frame.theta_row(r2, b));
                        let rhs = frame.alpha(i, frame.theta_row(r, b2), frame.theta_row(r2, b2));
                        if lhs != rhs {
                            let mut assignment = named("a", &tuple_at(k, n, r));
                            assignment.extend(named("a'", &tuple_at(k, n, r2)));
                            assignment.push(("b".into(), b));
                            assignment.push(("b'".into(), b2));
                            let w = Witness::new(
                                "alpha_i(theta(a, b), theta(a', b)) = alpha_i(theta(a, b'), theta(a', b'))",
                                Some(i + 1),
                                assignment,
                            );
                            return CheckReport::from_witness(Property::RightCancellable, Some(w));
                        }
                    }
                }
            }
        }
    }
    CheckReport::from_witness(Property::RightCancellable, None)
}

/// Whether every `theta_b : A^n -> A` is a bijection.
pub fn sections_bijective(frame: &ProtomodularFrame) -> bool {
    let k = frame.size();
    if frame.tuple_count() != k {
        return false;
    }
    (0..k).all(|b| {
        let mut seen = vec![false; k];
        (0..k).all(|r| !std::mem::replace(&mut seen[frame.theta_row(r, b)], true))
    })
}

/// `alpha_i(theta(a_1..a_n, b), b) = a_i`.
pub fn check_strict(frame: &ProtomodularFrame) -> CheckReport {
    let k = frame.size();
    let n = frame.n();
    let mut witness = None;
    let mut tuples = Tuples::new(k, n + 1);
    'outer: while let Some(t) = tuples.next() {
        let (a, b) = t.split_at(n);
        let b = b[0];
        let v = frame.theta(a, b);
        for (i, &ai) in a.iter().enumerate() {
            if frame.alpha(i, v, b) != ai {
                let mut assignment = named("a", a);
                assignment.push(("b".into(), b));
                witness = Some(Witness::new(
                    "alpha_i(theta(a_1, .., a_n, b), b) = a_i",
                    Some(i + 1),
                    assignment,
                ));
                break 'outer;
            }
        }
    }
    let mut report = CheckReport::from_witness(Property::Strict, witness);
    report.sections_bijective = Some(sections_bijective(frame));
    report
}

/// Value of the nested expression with the inner `theta` covering
/// `xs[p..=p+n]`.
fn placement(frame: &ProtomodularFrame, xs: &[usize], p: usize, buf: &mut Vec<usize>) -> usize {
    let n = frame.n();
    let inner = frame.theta(&xs[p..p + n], xs[p + n]);
    buf.clear();
    buf.extend_from_slice(&xs[..p]);
    buf.push(inner);
    buf.extend_from_slice(&xs[p + n + 1..]);
    frame.theta(&buf[..n], buf[n])
}

/// All `n + 1` contiguous placements of an inner `theta` inside an outer one
/// over `2n + 1` arguments agree. For `n = 1` this is associativity.
pub fn check_one_associative(frame: &ProtomodularFrame) -> CheckReport {
    let n = frame.n();
    let mut buf = Vec::with_capacity(n + 1);
    let mut tuples = Tuples::new(frame.size(), 2 * n + 1);
    while let Some(xs) = tuples.next() {
        let first = placement(frame, xs, 0, &mut buf);
        for p in 1..=n {
            if placement(frame, xs, p, &mut buf) != first {
                let w = Witness::new(
                    format!(
                        "inner theta at position 1 = inner theta at position {}",
                        p + 1
                    ),
                    None,
                    named("x", xs),
                );
                return CheckReport::from_witness(Property::OneAssociative, Some(w));
            }
        }
    }
    CheckReport::from_witness(Property::OneAssociative, None)
}

/// `theta(a, theta(b_1..b_n, c)) = theta(theta(a, b_1), .., theta(a, b_n), c)`.
pub fn check_consociative(frame: &ProtomodularFrame) -> CheckReport {
    let n = frame.n();
    let mut inner = vec![0; n];
    let mut tuples = Tuples::new(frame.size(), 2 * n + 1);
    while let Some(t) = tuples.next() {
        let (a, rest) = t.split_at(n);
        let (b, c) = rest.split_at(n);
        let c = c[0];
        let lhs = frame.theta(a, frame.theta(b, c));
        for (slot, &bj) in inner.iter_mut().zip(b) {
            *slot = frame.theta(a, bj);
        }
        if lhs != frame.theta(&inner, c) {
            let mut assignment = named("a", a);
            assignment.extend(named("b", b));
            assignment.push(("c".into(), c));
            let w = Witness::new(
                "theta(a, theta(b, c)) = theta(theta(a, b_1), .., theta(a, b_n), c)",
                None,
                assignment,
            );
            return CheckReport::from_witness(Property::Consociative, Some(w));
        }
    }
    CheckReport::from_witness(Property::Consociative, None)
}

fn b_independent(
    frame: &ProtomodularFrame,
    property: Property,
    law: &str,
    expr: impl Fn(usize, usize, usize) -> usize,
) -> CheckReport {
    let k = frame.size();
    let n = frame.n();
    for r in 0..frame.tuple_count() {
        for b in 0..k {
            for b2 in 0..k {
                for i in 0..n {
                    if expr(i, r, b) != expr(i, r, b2) {
                        let mut assignment = named("a", &tuple_at(k, n, r));
                        assignment.push(("b".into(), b));
                        assignment.push(("b'".into(), b2));
                        let w = Witness::new(law, Some(i + 1), assignment);
                        return CheckReport::from_witness(property, Some(w));
                    }
                }
            }
        }
    }
    CheckReport::from_witness(property, None)
}

/// The two one-sided weakenings of right-cancellability:
/// `alpha_i(b, theta(a, b))` and `alpha_i(theta(a, b), b)` do not depend on `b`.
pub fn check_simplified_rc(frame: &ProtomodularFrame) -> (CheckReport, CheckReport) {
    let left = b_independent(
        frame,
        Property::SimplifiedII,
        "alpha_i(b, theta(a, b)) = alpha_i(b', theta(a, b'))",
        |i, r, b| frame.alpha(i, b, frame.theta_row(r, b)),
    );
    let right = b_independent(
        frame,
        Property::SimplifiedIII,
        "alpha_i(theta(a, b), b) = alpha_i(theta(a, b'), b')",
        |i, r, b| frame.alpha(i, frame.theta_row(r, b), b),
    );
    (left, right)
}

/// A ternary operation on `{0..k-1}`, tabulated lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryTable {
    size: usize,
    table: Vec<usize>,
}

impl TernaryTable {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::Invalid("carrier must be non-empty".into()));
        }
        let expected = table_len(size, 3);
        if table.len() != expected {
            return Err(Error::TableLength {
                symbol: "p".into(),
                expected,
                found: table.len(),
            });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { value, size });
        }
        Ok(TernaryTable { size, table })
    }

    pub fn tabulate(size: usize, f: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(table_len(size, 3));
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    table.push(f(a, b, c));
                }
            }
        }
        TernaryTable::new(size, table)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> usize {
        self.table[tuple_index(self.size, &[a, b, c])]
    }

    /// First violation of `p(a, b, b) = a` or `p(a, a, b) = b`.
    pub fn malcev_violation(&self) -> Option<String> {
        for a in 0..self.size {
            for b in 0..self.size {
                if self.get(a, b, b) != a {
                    return Some(format!("p({a}, {b}, {b}) = {} != {a}", self.get(a, b, b)));
                }
                if self.get(a, a, b) != b {
                    return Some(format!("p({a}, {a}, {b}) = {} != {b}", self.get(a, a, b)));
                }
            }
        }
        None
    }
}

/// `p(a, b, c) = theta(alpha_1(a, b), .., alpha_n(a, b), c)` without checking
/// any law.
pub fn malcev_table(frame: &ProtomodularFrame) -> TernaryTable {
    TernaryTable::tabulate(frame.size(), |a, b, c| frame.theta(&frame.alphas(a, b), c))
        .expect("frame tables are in range")
}

/// The Mal'cev operation of a protomodular frame. Fails if the laws
/// `p(a,b,b) = a`, `p(a,a,b) = b` do not hold, which means the frame was not
/// protomodular.
pub fn derive_malcev(frame: &ProtomodularFrame) -> Result<TernaryTable> {
    let p = malcev_table(frame);
    match p.malcev_violation() {
        Some(msg) => Err(Error::MalcevLaw(msg)),
        None => Ok(p),
    }
}

/// `p(x, t, p(s, y, z)) = p(p(x, t, s), y, z)`.
pub fn check_malcev_associative(p: &TernaryTable) -> CheckReport {
    let mut tuples = Tuples::new(p.size(), 5);
    while let Some(t) = tuples.next() {
        let [x, tt, s, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        if p.get(x, tt, p.get(s, y, z)) != p.get(p.get(x, tt, s), y, z) {
            let names = ["x", "t", "s", "y", "z"];
            let w = Witness::new(
                "p(x, t, p(s, y, z)) = p(p(x, t, s), y, z)",
                None,
                names
                    .iter()
                    .map(|s| s.to_string())
                    .zip(t.iter().copied())
                    .collect(),
            );
            return CheckReport::from_witness(Property::MalcevAssociative, Some(w));
        }
    }
    CheckReport::from_witness(Property::MalcevAssociative, None)
}

/// Runs one named checker.
pub fn check(frame: &ProtomodularFrame, property: Property) -> CheckReport {
    match property {
        Property::Protomodular => check_protomodular(frame),
        Property::RightCancellable => check_right_cancellable(frame),
        Property::Strict => check_strict(frame),
        Property::Consociative => check_consociative(frame),
        Property::OneAssociative => check_one_associative(frame),
        Property::MalcevAssociative => check_malcev_associative(&malcev_table(frame)),
        Property::SimplifiedII => check_simplified_rc(frame).0,
        Property::SimplifiedIII => check_simplified_rc(frame).1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum N1Class {
    LeftSemiLoop,
    Loop,
    GroupUnderTheta,
}

impl N1Class {
    pub fn label(self) -> &'static str {
        match self {
            N1Class::LeftSemiLoop => "left-semi-loop",
            N1Class::Loop => "loop",
            N1Class::GroupUnderTheta => "group-under-theta",
        }
    }
}

impl fmt::Display for N1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `theta(a, e) = a` for all `a` (n = 1).
pub fn right_unit(frame: &ProtomodularFrame) -> bool {
    let e = frame.unit(0);
    (0..frame.size()).all(|a| frame.theta(&[a], e) == a)
}

/// Classifies a frame with `n = 1`, writing `ab` for `theta(a, b)`.
///
/// * left semi-loop: strict;
/// * loop: strict, every left translation `b -> ab` bijective and `e` a
///   two-sided unit;
/// * group: `theta` associative with two-sided unit `e` and inverses.
pub fn classify_n1(frame: &ProtomodularFrame) -> Result<BTreeSet<N1Class>> {
    if frame.n() != 1 {
        return Err(Error::Invalid(format!(
            "classification needs n = 1, frame has n = {}",
            frame.n()
        )));
    }
    let k = frame.size();
    let e = frame.unit(0);
    let mul = |a: usize, b: usize| frame.theta(&[a], b);
    let mut out = BTreeSet::new();

    let strict = check_strict(frame).holds;
    let two_sided_unit = (0..k).all(|a| mul(e, a) == a && mul(a, e) == a);
    let left_translations_bijective = (0..k).all(|a| {
        let mut seen = vec![false; k];
        (0..k).all(|b| !std::mem::replace(&mut seen[mul(a, b)], true))
    });
    if strict {
        out.insert(N1Class::LeftSemiLoop);
        if left_translations_bijective && two_sided_unit {
            out.insert(N1Class::Loop);
        }
    }

    let associative =
        (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| mul(mul(a, b), c) == mul(a, mul(b, c)))));
    let inverses = (0..k).all(|a| (0..k).any(|b| mul(a, b) == e && mul(b, a) == e));
    if associative && two_sided_unit && inverses {
        out.insert(N1Class::GroupUnderTheta);
    }
    Ok(out)
}

/// If `alpha_i(a, c) = alpha_i(b, c)` for all `i` then `a = b`. Returns a
/// violating `(a, b, c)`.
pub fn alpha_separation_violation(frame: &ProtomodularFrame) -> Option<(usize, usize, usize)> {
    let k = frame.size();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if a != b && frame.alphas(a, c) == frame.alphas(b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// If `alpha_i(a, b) = e_i` for all `i` then `a = b`. Returns a violating
/// `(a, b)`.
pub fn alpha_unit_violation(frame: &ProtomodularFrame) -> Option<(usize, usize)> {
    let k = frame.size();
    let units = frame.units();
    for a in 0..k {
        for b in 0..k {
            if a != b && frame.alphas(a, b) == units {
                return Some((a, b));
            }
        }
    }
    None
}

/// `theta(e_1, .., e_n, a) = a`. Returns a violating `a`.
pub fn unit_translation_violation(frame: &ProtomodularFrame) -> Option<usize> {
    let units = frame.units();
    (0..frame.size()).find(|&a| frame.theta(&units, a) != a)
}
