//! Group structures extracted from right-cancellable frames, and the two
//! equivalent presentations of such frames:
//!
//! * principal actions `(A, G, epsilon, mu)` with `epsilon ∘ mu = 1_G`;
//! * groups with a section `(A, sigma, rho)` with `sigma ∘ rho = 1_A`.
//!
//! Conversions are exact: converting a frame and back reproduces it table for
//! table.

mod files;

pub use files::{
    parse_action_quadruple, parse_group_triple, serialize_action_quadruple, serialize_group_triple,
};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::model::{table_len, tuple_at, tuple_index, ProtomodularFrame, Tuples};
use crate::protomod::{check_malcev_associative, check_protomodular, TernaryTable};
use crate::translations::RcFrame;

/// A binary operation on `{0..k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryTable {
    size: usize,
    table: Vec<usize>,
}

impl BinaryTable {
    pub fn tabulate(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        BinaryTable {
            size,
            table: (0..size * size).map(|i| f(i / size, i % size)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }
}

fn check_point(frame: &ProtomodularFrame, u: usize) -> Result<()> {
    if u >= frame.size() {
        return Err(Error::OutOfRange {
            value: u,
            size: frame.size(),
        });
    }
    Ok(())
}

impl RcFrame<'_> {
    /// `a ·_u b = theta(alpha_1(a, u), .., alpha_n(a, u), b)`, a group with
    /// unit `u` and inverse `theta(alpha_1(u, a), .., alpha_n(u, a), u)`.
    pub fn group_at(&self, u: usize) -> Result<GroupTable> {
        let f = self.frame();
        check_point(f, u)?;
        let k = f.size();
        let op = (0..k * k)
            .map(|i| f.theta(&f.alphas(i / k, u), i % k))
            .collect();
        let g = GroupTable::with_unit(k, op, u)
            .map_err(|e| Error::Internal(format!("product at {u} is not a group: {e}")))?;
        for a in 0..k {
            let expected = f.theta(&f.alphas(u, a), u);
            if g.inverse(a) != expected {
                return Err(Error::Internal(format!(
                    "inverse of {a} at {u} is {}, formula gives {expected}",
                    g.inverse(a)
                )));
            }
        }
        Ok(g)
    }

    /// `a /_u b = theta(alpha_1(a, b), .., alpha_n(a, b), u)`.
    pub fn right_division(&self, u: usize) -> Result<BinaryTable> {
        let f = self.frame();
        check_point(f, u)?;
        Ok(BinaryTable::tabulate(f.size(), |a, b| {
            f.theta(&f.alphas(a, b), u)
        }))
    }
}

pub fn group_at(frame: &ProtomodularFrame, u: usize) -> Result<GroupTable> {
    RcFrame::new(frame)?.group_at(u)
}

pub fn right_division(frame: &ProtomodularFrame, u: usize) -> Result<BinaryTable> {
    RcFrame::new(frame)?.right_division(u)
}

/// A group `G` acting principally on `A = {0..k-1}` with maps
/// `epsilon: A^n -> G` and `mu: G -> A^n` such that `epsilon ∘ mu = 1_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionQuadruple {
    size: usize,
    n: usize,
    group: GroupTable,
    action: Vec<usize>,
    epsilon: Vec<usize>,
    mu: Vec<Vec<usize>>,
}

impl ActionQuadruple {
    /// `action[g * size + x] = g·x`; `epsilon` is indexed by tuple rank.
    pub fn new(
        size: usize,
        n: usize,
        group: GroupTable,
        action: Vec<usize>,
        epsilon: Vec<usize>,
        mu: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = group.size();
        if size == 0 || n == 0 {
            return Err(Error::Invalid("need a non-empty carrier and n >= 1".into()));
        }
        if action.len() != m * size {
            return Err(Error::TableLength {
                symbol: "action".into(),
                expected: m * size,
                found: action.len(),
            });
        }
        if let Some(&value) = action.iter().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { value, size });
        }
        let act = |g: usize, x: usize| action[g * size + x];
        if (0..size).any(|x| act(group.unit(), x) != x) {
            return Err(Error::Invalid(
                "group unit does not act as the identity".into(),
            ));
        }
        for g in 0..m {
            for h in 0..m {
                for x in 0..size {
                    if act(group.mul(g, h), x) != act(g, act(h, x)) {
                        return Err(Error::Invalid(format!(
                            "not an action: ({g}{h})·{x} != {g}·({h}·{x})"
                        )));
                    }
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                let movers = (0..m).filter(|&g| act(g, x) == y).count();
                if movers != 1 {
                    return Err(Error::Invalid(format!(
                        "action is not principal: {movers} elements send {x} to {y}"
                    )));
                }
            }
        }
        let expected = table_len(size, n);
        if epsilon.len() != expected {
            return Err(Error::TableLength {
                symbol: "epsilon".into(),
                expected,
                found: epsilon.len(),
            });
        }
        if let Some(&value) = epsilon.iter().find(|&&g| g >= m) {
            return Err(Error::OutOfRange { value, size: m });
        }
        if mu.len() != m || mu.iter().any(|t| t.len() != n) {
            return Err(Error::Invalid(format!(
                "mu must list {m} tuples of length {n}"
            )));
        }
        if let Some(&value) = mu.iter().flatten().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { value, size });
        }
        for (g, t) in mu.iter().enumerate() {
            if epsilon[tuple_index(size, t)] != g {
                return Err(Error::Invalid(format!("epsilon(mu({g})) != {g}")));
            }
        }
        Ok(ActionQuadruple {
            size,
            n,
            group,
            action,
            epsilon,
            mu,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x]
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    pub fn epsilon(&self, tuple: &[usize]) -> usize {
        self.epsilon[tuple_index(self.size, tuple)]
    }

    pub fn epsilon_table(&self) -> &[usize] {
        &self.epsilon
    }

    pub fn mu(&self, g: usize) -> &[usize] {
        &self.mu[g]
    }

    pub fn mu_table(&self) -> &[Vec<usize>] {
        &self.mu
    }

    /// The unique `g` with `g·b = a`.
    fn mover(&self, b: usize, a: usize) -> usize {
        (0..self.group.size())
            .find(|&g| self.act(g, b) == a)
            .expect("principal action")
    }
}

/// `G` = translation group, `epsilon(a) = theta^a`,
/// `mu(g) = (alpha_1(g(0), 0), .., alpha_n(g(0), 0))`.
pub fn to_action_quadruple(frame: &ProtomodularFrame) -> Result<ActionQuadruple> {
    let rc = RcFrame::new(frame)?;
    let group = rc.translation_group()?;
    let k = frame.size();
    let n = frame.n();
    let u = 0;
    let action = group
        .elements()
        .iter()
        .flat_map(|t| t.map.iter().copied())
        .collect();
    let epsilon = (0..frame.tuple_count())
        .map(|row| {
            let map = &frame.theta_table()[row * k..(row + 1) * k];
            group
                .index_of_map(map)
                .expect("every translation is a group element")
        })
        .collect();
    let mu = group
        .elements()
        .iter()
        .map(|t| frame.alphas(t.map[u], u))
        .collect();
    ActionQuadruple::new(k, n, group.table().clone(), action, epsilon, mu)
        .map_err(|e| Error::Internal(format!("quadruple of a right-cancellable frame: {e}")))
}

fn verify_output(frame: ProtomodularFrame) -> Result<ProtomodularFrame> {
    if let Some(w) = check_protomodular(&frame).witness {
        return Err(Error::Internal(format!(
            "constructed frame is not protomodular ({w})"
        )));
    }
    RcFrame::new(&frame)
        .map_err(|_| Error::Internal("constructed frame is not right-cancellable".into()))?;
    Ok(frame)
}

/// `theta(a, b) = epsilon(a)·b`, `e_i = mu(1)_i`, `alpha_i(a, b) = mu(g)_i`
/// for the unique `g` with `g·b = a`.
pub fn from_action_quadruple(q: &ActionQuadruple, n: usize) -> Result<ProtomodularFrame> {
    if n != q.n {
        return Err(Error::Invalid(format!(
            "quadruple has n = {}, requested n = {n}",
            q.n
        )));
    }
    let k = q.size;
    let mut theta = Vec::with_capacity(table_len(k, n) * k);
    for &g in &q.epsilon {
        theta.extend((0..k).map(|b| q.act(g, b)));
    }
    let movers: Vec<usize> = (0..k * k).map(|i| q.mover(i % k, i / k)).collect();
    let alphas = (0..n)
        .map(|i| movers.iter().map(|&g| q.mu[g][i]).collect())
        .collect();
    let units = q.mu[q.group.unit()].clone();
    verify_output(ProtomodularFrame::new(n, k, theta, alphas, units)?)
}

/// A group on `A = {0..k-1}` with maps `sigma: A^n -> A`, `rho: A -> A^n`
/// such that `sigma ∘ rho = 1_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTriple {
    n: usize,
    group: GroupTable,
    sigma: Vec<usize>,
    rho: Vec<Vec<usize>>,
}

impl GroupTriple {
    pub fn new(
        n: usize,
        group: GroupTable,
        sigma: Vec<usize>,
        rho: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let k = group.size();
        if n == 0 {
            return Err(Error::Invalid("n must be positive".into()));
        }
        let expected = table_len(k, n);
        if sigma.len() != expected {
            return Err(Error::TableLength {
                symbol: "sigma".into(),
                expected,
                found: sigma.len(),
            });
        }
        if let Some(&value) = sigma.iter().find(|&&v| v >= k) {
            return Err(Error::OutOfRange { value, size: k });
        }
        if rho.len() != k || rho.iter().any(|t| t.len() != n) {
            return Err(Error::Invalid(format!(
                "rho must list {k} tuples of length {n}"
            )));
        }
        if let Some(&value) = rho.iter().flatten().find(|&&v| v >= k) {
            return Err(Error::OutOfRange { value, size: k });
        }
        for (a, t) in rho.iter().enumerate() {
            if sigma[tuple_index(k, t)] != a {
                return Err(Error::Invalid(format!("sigma(rho({a})) != {a}")));
            }
        }
        Ok(GroupTriple {
            n,
            group,
            sigma,
            rho,
        })
    }

    /// `n = 1`, `sigma = rho = 1_A`.
    pub fn plain(group: GroupTable) -> Self {
        let k = group.size();
        GroupTriple::new(
            1,
            group,
            (0..k).collect(),
            (0..k).map(|a| vec![a]).collect(),
        )
        .expect("identity section")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn sigma(&self, tuple: &[usize]) -> usize {
        self.sigma[tuple_index(self.group.size(), tuple)]
    }

    pub fn sigma_table(&self) -> &[usize] {
        &self.sigma
    }

    pub fn rho(&self, a: usize) -> &[usize] {
        &self.rho[a]
    }

    pub fn rho_table(&self) -> &[Vec<usize>] {
        &self.rho
    }

    /// Whether `sigma` and `rho` are mutually inverse bijections.
    pub fn is_bijective(&self) -> bool {
        self.sigma.len() == self.rho.len()
    }
}

/// `(A with ·_u, theta(-, u), (alpha_1(-, u), .., alpha_n(-, u)))`.
pub fn to_group_triple(frame: &ProtomodularFrame, u: usize) -> Result<GroupTriple> {
    let rc = RcFrame::new(frame)?;
    let group = rc.group_at(u)?;
    let sigma = (0..frame.tuple_count())
        .map(|row| frame.theta_row(row, u))
        .collect();
    let rho = (0..frame.size()).map(|a| frame.alphas(a, u)).collect();
    GroupTriple::new(frame.n(), group, sigma, rho)
        .map_err(|e| Error::Internal(format!("triple of a right-cancellable frame: {e}")))
}

/// `theta(a, b) = sigma(a)·b`, `alpha_i(a, b) = rho(a·b^-1)_i`,
/// `e_i = rho(1)_i`.
pub fn from_group_triple(t: &GroupTriple, n: usize) -> Result<ProtomodularFrame> {
    if n != t.n {
        return Err(Error::Invalid(format!(
            "triple has n = {}, requested n = {n}",
            t.n
        )));
    }
    let g = &t.group;
    let k = g.size();
    let mut theta = Vec::with_capacity(t.sigma.len() * k);
    for &s in &t.sigma {
        theta.extend((0..k).map(|b| g.mul(s, b)));
    }
    let alphas = (0..n)
        .map(|i| {
            (0..k * k)
                .map(|idx| t.rho[g.mul(idx / k, g.inverse(idx % k))][i])
                .collect()
        })
        .collect();
    let units = t.rho[g.unit()].clone();
    let frame = verify_output(ProtomodularFrame::new(n, k, theta, alphas, units)?)?;
    if t.is_bijective() && !crate::protomod::check_strict(&frame).holds {
        return Err(Error::Internal(
            "bijective section produced a non-strict frame".into(),
        ));
    }
    Ok(frame)
}

/// `ab = p(a, u, b)`, `a^-1 = p(u, a, u)`.
pub fn malcev_to_group(p: &TernaryTable, u: usize) -> Result<GroupTable> {
    let k = p.size();
    if u >= k {
        return Err(Error::OutOfRange { value: u, size: k });
    }
    if let Some(msg) = p.malcev_violation() {
        return Err(Error::MalcevLaw(msg));
    }
    if let Some(w) = check_malcev_associative(p).witness {
        return Err(Error::MalcevLaw(format!("not associative ({w})")));
    }
    let g = GroupTable::with_unit(k, (0..k * k).map(|i| p.get(i / k, u, i % k)).collect(), u)?;
    for a in 0..k {
        if g.inverse(a) != p.get(u, a, u) {
            return Err(Error::Internal(format!(
                "inverse of {a} disagrees with p(u, a, u)"
            )));
        }
    }
    Ok(g)
}

/// `p(a, b, c) = a b^-1 c`.
pub fn group_to_malcev(g: &GroupTable) -> TernaryTable {
    TernaryTable::tabulate(g.size(), |a, b, c| g.mul(g.mul(a, g.inverse(b)), c))
        .expect("group table is in range")
}

/// Every tuple of `A^n` in lexicographic order; helper for callers building
/// `sigma` or `epsilon` tables.
pub fn all_tuples(size: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(table_len(size, n));
    let mut it = Tuples::new(size, n);
    while let Some(t) = it.next() {
        out.push(t.to_vec());
    }
    debug_assert!(out
        .iter()
        .enumerate()
        .all(|(i, t)| tuple_at(size, n, i) == *t));
    out
}
