//! Text formats for group triples (`pmgrp`) and action quadruples (`pmact`).
//!
//! ```text
//! pmgrp 1
//! n 1
//! size 2
//! group
//! 0 1
//! 1 0
//! sigma
//! 0 1
//! rho
//! 0
//! 1
//! ```
//!
//! `sigma` is laid out like `theta`: one row per `(a_1..a_{n-1})`, column
//! `a_n`. `rho` has one row per element. The group unit is read off the
//! table.
//!
//! ```text
//! pmact 1
//! n 1
//! size 2
//! order 2
//! group
//! 0 1
//! 1 0
//! action
//! 0 1
//! 1 0
//! epsilon
//! 0 1
//! mu
//! 0
//! 1
//! ```
//!
//! Row `g` of `action` lists `g·0 .. g·(k-1)`; `epsilon` uses the `sigma`
//! layout with values in the group; row `g` of `mu` is `mu(g)`.

use super::{ActionQuadruple, GroupTriple};
use crate::error::Result;
use crate::group::GroupTable;
use crate::textfmt::{checked_table_len, write_rows, Reader};

fn tuples(flat: Vec<usize>, n: usize) -> Vec<Vec<usize>> {
    flat.chunks(n).map(<[usize]>::to_vec).collect()
}

pub fn parse_group_triple(text: &str) -> Result<GroupTriple> {
    let mut r = Reader::new(text);
    r.header("pmgrp")?;
    let n = r.positive("n")?;
    let size = r.positive("size")?;

    let line = r.section(&["group"])?;
    checked_table_len(line, size, 2)?;
    let op = r.rows("group", line, size, size, size)?;

    let line = r.section(&["sigma"])?;
    let rows = checked_table_len(line, size, n - 1)?;
    let sigma = r.rows("sigma", line, rows, size, size)?;

    let line = r.section(&["rho"])?;
    let rho = r.rows("rho", line, size, n, size)?;
    r.finish()?;

    GroupTriple::new(n, GroupTable::from_op(size, op)?, sigma, tuples(rho, n))
}

pub fn serialize_group_triple(t: &GroupTriple) -> String {
    let k = t.group().size();
    let mut out = format!("pmgrp 1\nn {}\nsize {k}\ngroup\n", t.n());
    write_rows(&mut out, t.group().op_table(), k);
    out.push_str("sigma\n");
    write_rows(&mut out, t.sigma_table(), k);
    out.push_str("rho\n");
    write_rows(&mut out, &t.rho_table().concat(), t.n());
    out
}

pub fn parse_action_quadruple(text: &str) -> Result<ActionQuadruple> {
    let mut r = Reader::new(text);
    r.header("pmact")?;
    let n = r.positive("n")?;
    let size = r.positive("size")?;
    let order = r.positive("order")?;

    let line = r.section(&["group"])?;
    checked_table_len(line, order, 2)?;
    let op = r.rows("group", line, order, order, order)?;

    let line = r.section(&["action"])?;
    let action = r.rows("action", line, order, size, size)?;

    let line = r.section(&["epsilon"])?;
    let rows = checked_table_len(line, size, n - 1)?;
    let epsilon = r.rows("epsilon", line, rows, size, order)?;

    let line = r.section(&["mu"])?;
    let mu = r.rows("mu", line, order, n, size)?;
    r.finish()?;

    ActionQuadruple::new(
        size,
        n,
        GroupTable::from_op(order, op)?,
        action,
        epsilon,
        tuples(mu, n),
    )
}

pub fn serialize_action_quadruple(q: &ActionQuadruple) -> String {
    let k = q.size();
    let m = q.group().size();
    let mut out = format!("pmact 1\nn {}\nsize {k}\norder {m}\ngroup\n", q.n());
    write_rows(&mut out, q.group().op_table(), m);
    out.push_str("action\n");
    write_rows(&mut out, q.action_table(), k);
    out.push_str("epsilon\n");
    write_rows(&mut out, q.epsilon_table(), k);
    out.push_str("mu\n");
    write_rows(&mut out, &q.mu_table().concat(), q.n());
    out
}
