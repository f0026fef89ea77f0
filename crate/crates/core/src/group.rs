//! Finite groups as Cayley tables, and identification of groups of order at
//! most 8.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    size: usize,
    op: Vec<usize>,
    unit: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates `op` as a group operation on `{0..size-1}` and finds its unit
    /// and inverses.
    pub fn from_op(size: usize, op: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::GroupLaw("empty carrier".into()));
        }
        if op.len() != size * size {
            return Err(Error::TableLength {
                symbol: "group".into(),
                expected: size * size,
                found: op.len(),
            });
        }
        if let Some(&value) = op.iter().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { value, size });
        }
        let m = |a: usize, b: usize| op[a * size + b];
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::GroupLaw(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let unit = (0..size)
            .find(|&u| (0..size).all(|a| m(u, a) == a && m(a, u) == a))
            .ok_or_else(|| Error::GroupLaw("no two-sided unit".into()))?;
        let inverse = (0..size)
            .map(|a| {
                (0..size)
                    .find(|&b| m(a, b) == unit && m(b, a) == unit)
                    .ok_or_else(|| Error::GroupLaw(format!("{a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable {
            size,
            op,
            unit,
            inverse,
        })
    }

    /// As [`GroupTable::from_op`], additionally requiring the unit to be `unit`.
    pub fn with_unit(size: usize, op: Vec<usize>, unit: usize) -> Result<Self> {
        let g = GroupTable::from_op(size, op)?;
        if g.unit != unit {
            return Err(Error::GroupLaw(format!(
                "unit is {}, expected {unit}",
                g.unit
            )));
        }
        Ok(g)
    }

    pub fn tabulate(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let op = (0..size * size).map(|i| f(i / size, i % size)).collect();
        GroupTable::from_op(size, op)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn op_table(&self) -> &[usize] {
        &self.op
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size + b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut order = 1;
        while x != self.unit {
            x = self.mul(x, a);
            order += 1;
        }
        order
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.size).map(|a| self.element_order(a)).collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p = self.element_orders();
        p.sort_unstable();
        p
    }

    pub fn cyclic(n: usize) -> Self {
        GroupTable::tabulate(n, |a, b| (a + b) % n).expect("cyclic group")
    }

    /// Pairs `(a, b)` encoded as `a * |h| + b`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let hs = h.size;
        GroupTable::tabulate(g.size * hs, |x, y| {
            g.mul(x / hs, y / hs) * hs + h.mul(x % hs, y % hs)
        })
        .expect("product of groups")
    }

    /// Symmetric group on three letters, elements in lexicographic
    /// permutation order, product `(p q)(x) = p(q(x))`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        GroupTable::tabulate(6, |a, b| {
            let (p, q) = (perms[a], perms[b]);
            index([p[q[0]], p[q[1]], p[q[2]]])
        })
        .expect("S3")
    }

    /// Symmetries of the square: `r^i s^j` encoded as `2i + j`.
    pub fn dihedral4() -> Self {
        GroupTable::tabulate(8, |x, y| {
            let (i, j) = (x / 2, x % 2);
            let (k, l) = (y / 2, y % 2);
            // s r^k = r^-k s
            let rot = if j == 0 { (i + k) % 4 } else { (i + 4 - k) % 4 };
            rot * 2 + (j ^ l)
        })
        .expect("D4")
    }

    /// Quaternion group: `sign * {1, i, j, k}` encoded as `2 * unit + neg`.
    pub fn quaternion() -> Self {
        // products of the basis units 1, i, j, k: (result, negated)
        const BASIS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        GroupTable::tabulate(8, |x, y| {
            let (u, s) = BASIS[x / 2][y / 2];
            u * 2 + (s ^ (x % 2) ^ (y % 2))
        })
        .expect("Q8")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    Trivial,
    Z2,
    Z3,
    Z4,
    V4,
    Z5,
    Z6,
    S3,
    Z7,
    Z8,
    Z4xZ2,
    Z2Cubed,
    D4,
    Q8,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 14] = [
        GroupLabel::Trivial,
        GroupLabel::Z2,
        GroupLabel::Z3,
        GroupLabel::Z4,
        GroupLabel::V4,
        GroupLabel::Z5,
        GroupLabel::Z6,
        GroupLabel::S3,
        GroupLabel::Z7,
        GroupLabel::Z8,
        GroupLabel::Z4xZ2,
        GroupLabel::Z2Cubed,
        GroupLabel::D4,
        GroupLabel::Q8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupLabel::Trivial => "1",
            GroupLabel::Z2 => "Z2",
            GroupLabel::Z3 => "Z3",
            GroupLabel::Z4 => "Z4",
            GroupLabel::V4 => "V4",
            GroupLabel::Z5 => "Z5",
            GroupLabel::Z6 => "Z6",
            GroupLabel::S3 => "S3",
            GroupLabel::Z7 => "Z7",
            GroupLabel::Z8 => "Z8",
            GroupLabel::Z4xZ2 => "Z4xZ2",
            GroupLabel::Z2Cubed => "Z2^3",
            GroupLabel::D4 => "D4",
            GroupLabel::Q8 => "Q8",
        }
    }

    /// A representative Cayley table.
    pub fn representative(self) -> GroupTable {
        let z = GroupTable::cyclic;
        match self {
            GroupLabel::Trivial => z(1),
            GroupLabel::Z2 => z(2),
            GroupLabel::Z3 => z(3),
            GroupLabel::Z4 => z(4),
            GroupLabel::V4 => GroupTable::direct_product(&z(2), &z(2)),
            GroupLabel::Z5 => z(5),
            GroupLabel::Z6 => z(6),
            GroupLabel::S3 => GroupTable::symmetric3(),
            GroupLabel::Z7 => z(7),
            GroupLabel::Z8 => z(8),
            GroupLabel::Z4xZ2 => GroupTable::direct_product(&z(4), &z(2)),
            GroupLabel::Z2Cubed => {
                GroupTable::direct_product(&GroupTable::direct_product(&z(2), &z(2)), &z(2))
            }
            GroupLabel::D4 => GroupTable::dihedral4(),
            GroupLabel::Q8 => GroupTable::quaternion(),
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Searches for an isomorphism `g -> h`, returned as the image of each
/// element of `g`.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<usize>> {
    if g.size() != h.size() || g.order_profile() != h.order_profile() {
        return None;
    }
    let g_orders = g.element_orders();
    let h_orders = h.element_orders();
    let mut image: Vec<Option<usize>> = vec![None; g.size()];
    let mut used = vec![false; h.size()];

    fn consistent(g: &GroupTable, h: &GroupTable, image: &[Option<usize>]) -> bool {
        for x in 0..g.size() {
            let Some(fx) = image[x] else { continue };
            for y in 0..g.size() {
                let Some(fy) = image[y] else { continue };
                if let Some(fxy) = image[g.mul(x, y)] {
                    if h.mul(fx, fy) != fxy {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(
        x: usize,
        g: &GroupTable,
        h: &GroupTable,
        g_orders: &[usize],
        h_orders: &[usize],
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if x == g.size() {
            return true;
        }
        for y in 0..h.size() {
            if used[y] || g_orders[x] != h_orders[y] {
                continue;
            }
            image[x] = Some(y);
            used[y] = true;
            if consistent(g, h, image) && extend(x + 1, g, h, g_orders, h_orders, image, used) {
                return true;
            }
            image[x] = None;
            used[y] = false;
        }
        false
    }

    extend(0, g, h, &g_orders, &h_orders, &mut image, &mut used)
        .then(|| image.into_iter().map(|y| y.unwrap()).collect())
}

pub fn is_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Isomorphism class of a group of order at most 8. Candidates are narrowed
/// by order profile and confirmed by an explicit isomorphism.
pub fn identify_small_group(g: &GroupTable) -> Result<GroupLabel> {
    if g.size() > 8 {
        return Err(Error::GroupTooLarge(g.size()));
    }
    let profile = g.order_profile();
    GroupLabel::ALL
        .into_iter()
        .filter(|label| {
            let rep = label.representative();
            rep.size() == g.size() && rep.order_profile() == profile
        })
        .find(|label| is_isomorphic(g, &label.representative()))
        .ok_or_else(|| Error::Internal(format!("no catalog group matches profile {profile:?}")))
}
