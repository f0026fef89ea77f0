//! Translations `b -> theta(a_1, .., a_n, b)` and the group they form on a
//! right-cancellable frame.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::model::{tuple_at, tuple_index, ProtomodularFrame};
use crate::protomod::check_right_cancellable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Translation {
    /// A tuple producing this map.
    pub rep: Vec<usize>,
    /// `map[b] = theta(rep, b)`.
    pub map: Vec<usize>,
}

impl Translation {
    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(b, &v)| b == v)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose_map(&self, other: &Translation) -> Vec<usize> {
        other.map.iter().map(|&x| self.map[x]).collect()
    }

    pub fn inverse_map(&self) -> Option<Vec<usize>> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(inv)
    }
}

fn check_tuple(frame: &ProtomodularFrame, tuple: &[usize]) -> Result<()> {
    if tuple.len() != frame.n() {
        return Err(Error::Invalid(format!(
            "tuple of length {} for n = {}",
            tuple.len(),
            frame.n()
        )));
    }
    check_elements(frame, tuple)
}

fn check_elements(frame: &ProtomodularFrame, xs: &[usize]) -> Result<()> {
    match xs.iter().find(|&&x| x >= frame.size()) {
        Some(&value) => Err(Error::OutOfRange {
            value,
            size: frame.size(),
        }),
        None => Ok(()),
    }
}

fn row_translation(frame: &ProtomodularFrame, row: usize) -> Translation {
    let k = frame.size();
    Translation {
        rep: tuple_at(k, frame.n(), row),
        map: frame.theta_table()[row * k..(row + 1) * k].to_vec(),
    }
}

pub fn translation_of(frame: &ProtomodularFrame, tuple: &[usize]) -> Result<Translation> {
    check_tuple(frame, tuple)?;
    Ok(row_translation(frame, tuple_index(frame.size(), tuple)))
}

/// All translations, deduplicated by their full map, in order of first
/// occurrence over tuples in lexicographic order.
pub fn distinct_translations(frame: &ProtomodularFrame) -> Vec<Translation> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for row in 0..frame.tuple_count() {
        let t = row_translation(frame, row);
        if !seen.contains_key(&t.map) {
            seen.insert(t.map.clone(), out.len());
            out.push(t);
        }
    }
    out
}

/// A partition of `A^n`. Blocks are listed by their least tuple and each
/// block is sorted, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    pub blocks: Vec<Vec<Vec<usize>>>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Preimage classes of `theta_b : A^n -> A`.
pub fn kernel_partition(frame: &ProtomodularFrame, b: usize) -> Result<Partition> {
    check_elements(frame, &[b])?;
    let k = frame.size();
    let mut block_of_value: HashMap<usize, usize> = HashMap::new();
    let mut blocks: Vec<Vec<Vec<usize>>> = Vec::new();
    for row in 0..frame.tuple_count() {
        let v = frame.theta_row(row, b);
        let idx = *block_of_value.entry(v).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[idx].push(tuple_at(k, frame.n(), row));
    }
    Ok(Partition { blocks })
}

/// A frame known to be right-cancellable. Construction runs the full check
/// once; the tuple formulas below rely on it.
#[derive(Debug, Clone, Copy)]
pub struct RcFrame<'a>(&'a ProtomodularFrame);

impl<'a> RcFrame<'a> {
    pub fn new(frame: &'a ProtomodularFrame) -> Result<Self> {
        if check_right_cancellable(frame).holds {
            Ok(RcFrame(frame))
        } else {
            Err(Error::NotRightCancellable)
        }
    }

    pub fn frame(&self) -> &'a ProtomodularFrame {
        self.0
    }

    /// `c` with `theta^c = theta^a ∘ theta^b`:
    /// `c_i = alpha_i(theta(a, u), theta(b', u))` where
    /// `b'_j = alpha_j(u, theta(b, u))` is the inverse tuple of `b`.
    pub fn compose_tuple(&self, a: &[usize], b: &[usize], u: usize) -> Result<Vec<usize>> {
        let f = self.0;
        check_tuple(f, a)?;
        let b_inv = self.inverse_tuple(b, u)?;
        let x = f.theta(a, u);
        let y = f.theta(&b_inv, u);
        Ok(f.alphas(x, y))
    }

    /// `b` with `theta^b = (theta^a)^-1`: `b_i = alpha_i(u, theta(a, u))`.
    pub fn inverse_tuple(&self, a: &[usize], u: usize) -> Result<Vec<usize>> {
        let f = self.0;
        check_tuple(f, a)?;
        check_elements(f, &[u])?;
        Ok(f.alphas(u, f.theta(a, u)))
    }

    pub fn translation_group(&self) -> Result<TranslationGroup> {
        TranslationGroup::build(self.0)
    }
}

/// The translations of a right-cancellable frame under composition.
///
/// `table().mul(g, h)` is the index of `g ∘ h` (apply `h` first), so
/// `elements()[g].map[x]` is a left action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationGroup {
    elements: Vec<Translation>,
    table: GroupTable,
}

impl TranslationGroup {
    fn build(frame: &ProtomodularFrame) -> Result<Self> {
        let elements = distinct_translations(frame);
        let index: HashMap<&[usize], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, t)| (t.map.as_slice(), i))
            .collect();
        let m = elements.len();
        let mut op = Vec::with_capacity(m * m);
        for g in &elements {
            for h in &elements {
                let composite = g.compose_map(h);
                let &c = index.get(composite.as_slice()).ok_or_else(|| {
                    Error::Internal(format!(
                        "translations of {:?} and {:?} compose to a non-translation",
                        g.rep, h.rep
                    ))
                })?;
                op.push(c);
            }
        }
        let table = GroupTable::from_op(m, op)
            .map_err(|e| Error::Internal(format!("translations do not form a group: {e}")))?;
        if !elements[table.unit()].is_identity() {
            return Err(Error::Internal("group unit is not the identity map".into()));
        }
        let group = TranslationGroup { elements, table };
        if !group.acts_principally() {
            return Err(Error::Internal(
                "translation action is not principal".into(),
            ));
        }
        Ok(group)
    }

    pub fn elements(&self) -> &[Translation] {
        &self.elements
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn unit_index(&self) -> usize {
        self.table.unit()
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.table.inverse(g)
    }

    pub fn index_of_map(&self, map: &[usize]) -> Option<usize> {
        self.elements.iter().position(|t| t.map == map)
    }

    /// For every `(x, y)` exactly one element maps `x` to `y`.
    pub fn acts_principally(&self) -> bool {
        let k = self.elements.first().map_or(0, |t| t.map.len());
        (0..k).all(|x| (0..k).all(|y| self.elements.iter().filter(|t| t.map[x] == y).count() == 1))
    }
}

/// The translation group; refuses frames that are not right-cancellable.
pub fn translation_group(frame: &ProtomodularFrame) -> Result<TranslationGroup> {
    RcFrame::new(frame)?.translation_group()
}

pub fn compose_tuple_formula(
    frame: &ProtomodularFrame,
    a: &[usize],
    b: &[usize],
    u: usize,
) -> Result<Vec<usize>> {
    RcFrame::new(frame)?.compose_tuple(a, b, u)
}

pub fn inverse_tuple_formula(
    frame: &ProtomodularFrame,
    a: &[usize],
    u: usize,
) -> Result<Vec<usize>> {
    RcFrame::new(frame)?.inverse_tuple(a, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::{identify_small_group, GroupLabel};

    #[test]
    fn e34_translations() {
        let e34 = fixtures::e34();
        assert_eq!(translation_of(&e34, &[1, 2, 1]).unwrap().map, [1, 0, 3, 2]);
        assert_eq!(translation_of(&e34, &[3, 0, 2]).unwrap().map, [2, 3, 0, 1]);
        assert_eq!(distinct_translations(&e34).len(), 4);
    }

    #[test]
    fn unit_tuple_translates_identically() {
        for (name, f) in fixtures::all() {
            assert!(
                translation_of(&f, &f.units()).unwrap().is_identity(),
                "{name}"
            );
        }
    }

    #[test]
    fn translation_of_rejects_bad_tuples() {
        let e34 = fixtures::e34();
        assert!(matches!(
            translation_of(&e34, &[0, 4, 0]),
            Err(Error::OutOfRange { value: 4, .. })
        ));
        assert!(matches!(
            translation_of(&e34, &[0, 0]),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn distinct_translation_counts() {
        assert_eq!(distinct_translations(&fixtures::e32()).len(), 3);
        assert_eq!(distinct_translations(&fixtures::triv1()).len(), 1);
    }

    #[test]
    fn e33_kernel_partition() {
        let e33 = fixtures::e33();
        let p0 = kernel_partition(&e33, 0).unwrap();
        // theta(i, j, 0) = 0 exactly when i != j
        assert_eq!(
            p0.blocks,
            vec![vec![vec![0, 0], vec![1, 1]], vec![vec![0, 1], vec![1, 0]]]
        );
        let p1 = kernel_partition(&e33, 1).unwrap();
        let canon = |p: &Partition| {
            let mut b = p.blocks.clone();
            b.sort();
            b
        };
        assert_eq!(canon(&p0), canon(&p1));
        assert_eq!(kernel_partition(&fixtures::triv1(), 0).unwrap().len(), 1);
    }

    #[test]
    fn groups_of_fixtures() {
        let g = translation_group(&fixtures::e34()).unwrap();
        assert_eq!(g.order(), 4);
        let t = g.table();
        for x in 0..4 {
            if x != t.unit() {
                assert_eq!(t.element_order(x), 2);
            }
        }
        assert_eq!(identify_small_group(t).unwrap(), GroupLabel::V4);

        let g = translation_group(&fixtures::e32()).unwrap();
        assert_eq!(identify_small_group(g.table()).unwrap(), GroupLabel::Z3);

        let g = translation_group(&fixtures::triv1()).unwrap();
        assert_eq!(
            identify_small_group(g.table()).unwrap(),
            GroupLabel::Trivial
        );
    }

    #[test]
    fn translation_group_refuses_non_rc() {
        assert_eq!(
            translation_group(&fixtures::bool2()),
            Err(Error::NotRightCancellable)
        );
        assert_eq!(
            translation_group(&fixtures::lip6()),
            Err(Error::NotRightCancellable)
        );
    }

    #[test]
    fn composition_formula_on_e34() {
        let e34 = fixtures::e34();
        let c = compose_tuple_formula(&e34, &[1, 2, 1], &[3, 0, 2], 0).unwrap();
        assert_eq!(translation_of(&e34, &c).unwrap().map, [3, 2, 1, 0]);
        let c = compose_tuple_formula(&e34, &[1, 2, 1], &[0, 0, 1], 3).unwrap();
        assert_eq!(translation_of(&e34, &c).unwrap().map, [1, 0, 3, 2]);
    }

    #[test]
    fn composition_formula_on_e32() {
        let e32 = fixtures::e32();
        let c = compose_tuple_formula(&e32, &[1], &[1], 0).unwrap();
        let expected: Vec<usize> = (0..3)
            .map(|b| e32.theta(&[1], e32.theta(&[1], b)))
            .collect();
        assert_eq!(translation_of(&e32, &c).unwrap().map, expected);
    }

    #[test]
    fn inverse_formula() {
        let e32 = fixtures::e32();
        // alpha(0, theta(1, 0)) = alpha(0, 2) = 2
        assert_eq!(inverse_tuple_formula(&e32, &[1], 0).unwrap(), [2]);

        let e34 = fixtures::e34();
        let b = inverse_tuple_formula(&e34, &[1, 2, 1], 0).unwrap();
        assert_eq!(translation_of(&e34, &b).unwrap().map, [1, 0, 3, 2]);

        for (name, f) in fixtures::right_cancellable() {
            let b = inverse_tuple_formula(&f, &f.units(), 0).unwrap();
            assert!(translation_of(&f, &b).unwrap().is_identity(), "{name}");
        }
    }

    #[test]
    fn formulas_refuse_non_rc() {
        let f = fixtures::bool2();
        assert_eq!(
            inverse_tuple_formula(&f, &[0, 0], 0),
            Err(Error::NotRightCancellable)
        );
        assert_eq!(
            compose_tuple_formula(&f, &[0, 0], &[0, 0], 0),
            Err(Error::NotRightCancellable)
        );
    }
}
