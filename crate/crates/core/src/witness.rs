//! Certificates that `y ∈ ⇑ₙx`.
//!
//! A witness of depth `n` is a complete binary tree whose nodes are
//! addressed by bit strings `s` of length at most `n`. Each node carries
//! `x_s, y_s ∈ X` and `a_s, b_s ∈ X¹`, subject to
//!
//! 1. `x_s = x` at every leaf (`|s| = n`);
//! 2. `y_s = a_s·x_s·b_s` at every node;
//! 3. `y_s = x_{s0}·x_{s1}` at every internal node;
//! 4. `x_() = y` at the root.
//!
//! Text form: a header line `witness(depth=<n>, x=<i>, y=<i>)` followed by
//! one `node(s=<bits>, x=<i>, y=<i>, a=<i|ONE>, b=<i|ONE>)` line per node in
//! depth-first preorder. The root has the empty bit string.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quasiorder::{up_class_traced, UpClassTrace};
use crate::semigroup::{Factor, Semigroup};

/// Trees deeper than this are refused rather than materialized.
pub const MAX_WITNESS_DEPTH: usize = 20;

/// Node address: the path from the root, `false` = left child.
/// The derived order is depth-first preorder.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Address(pub Vec<bool>);

impl Address {
    pub fn root() -> Self {
        Address(Vec::new())
    }

    /// Distance from the root.
    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: bool) -> Self {
        let mut v = self.0.clone();
        v.push(bit);
        Address(v)
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessNode {
    pub x: usize,
    pub y: usize,
    pub a: Factor,
    pub b: Factor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTree {
    pub depth: usize,
    pub base_x: usize,
    pub root_y: usize,
    pub nodes: BTreeMap<Address, WitnessNode>,
}

/// The four condition families a witness must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Condition {
    /// leaves carry the base element
    LeafIsBase,
    /// `y_s = a_s·x_s·b_s`
    Sandwich,
    /// `y_s = x_{s0}·x_{s1}`
    Product,
    /// the root carries `y`
    Root,
}

impl Condition {
    pub fn number(self) -> usize {
        match self {
            Condition::LeafIsBase => 1,
            Condition::Sandwich => 2,
            Condition::Product => 3,
            Condition::Root => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub at: Address,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}) fails at s={}", self.condition.number(), self.at)
    }
}

impl WitnessTree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> Option<&WitnessNode> {
        self.nodes.get(&Address::root())
    }

    fn check_shape(&self, s: &Semigroup) -> Result<()> {
        if self.depth > MAX_WITNESS_DEPTH {
            return Err(Error::WitnessTooDeep(self.depth));
        }
        let n = s.order();
        if self.base_x >= n || self.root_y >= n {
            return Err(Error::MalformedTree("header element out of range".into()));
        }
        if let Some(addr) = self.nodes.keys().find(|a| a.level() > self.depth) {
            return Err(Error::MalformedTree(format!("node s={addr} is deeper than {}", self.depth)));
        }
        let expected = (1usize << (self.depth + 1)) - 1;
        if self.nodes.len() != expected {
            return Err(Error::MalformedTree(format!(
                "expected {expected} nodes for depth {}, found {}",
                self.depth,
                self.nodes.len()
            )));
        }
        for (addr, node) in &self.nodes {
            let factor_ok = |f: Factor| matches!(f, Factor::One) || matches!(f, Factor::Elem(e) if e < n);
            if node.x >= n || node.y >= n || !factor_ok(node.a) || !factor_ok(node.b) {
                return Err(Error::MalformedTree(format!("element out of range at s={addr}")));
            }
        }
        Ok(())
    }

    /// Every failed condition instance, ordered by condition family and
    /// then by node in preorder.
    pub fn violations(&self, s: &Semigroup) -> Result<Vec<Violation>> {
        self.check_shape(s)?;
        let mut out = Vec::new();
        let mut fail = |condition, at: &Address| {
            out.push(Violation {
                condition,
                at: at.clone(),
            })
        };
        for (addr, node) in &self.nodes {
            if addr.level() == self.depth && node.x != self.base_x {
                fail(Condition::LeafIsBase, addr);
            }
        }
        for (addr, node) in &self.nodes {
            if node.y != s.sandwich(node.a, node.x, node.b) {
                fail(Condition::Sandwich, addr);
            }
        }
        for (addr, node) in &self.nodes {
            if addr.level() < self.depth {
                let left = self.nodes[&addr.child(false)].x;
                let right = self.nodes[&addr.child(true)].x;
                if node.y != s.mul(left, right) {
                    fail(Condition::Product, addr);
                }
            }
        }
        let root = Address::root();
        if self.nodes[&root].x != self.root_y {
            fail(Condition::Root, &root);
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("witness(depth={}, x={}, y={})\n", self.depth, self.base_x, self.root_y);
        for (addr, node) in &self.nodes {
            out.push_str(&format!(
                "node(s={}, x={}, y={}, a={}, b={})\n",
                addr, node.x, node.y, node.a, node.b
            ));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty witness file".into()))?;
        let fields = fields_of(header, "witness")?;
        let depth = number(&fields, "depth")?;
        let base_x = number(&fields, "x")?;
        let root_y = number(&fields, "y")?;
        let mut nodes = BTreeMap::new();
        for line in lines {
            let f = fields_of(line, "node")?;
            let bits = field(&f, "s")?;
            let addr = Address(
                bits.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("bad address {bits:?}"))),
                    })
                    .collect::<Result<_>>()?,
            );
            let node = WitnessNode {
                x: number(&f, "x")?,
                y: number(&f, "y")?,
                a: factor(&f, "a")?,
                b: factor(&f, "b")?,
            };
            if nodes.insert(addr.clone(), node).is_some() {
                return Err(Error::MalformedTree(format!("duplicate node s={addr}")));
            }
        }
        Ok(WitnessTree {
            depth,
            base_x,
            root_y,
            nodes,
        })
    }
}

fn fields_of<'a>(line: &'a str, head: &str) -> Result<Vec<(&'a str, &'a str)>> {
    let inner = line
        .strip_prefix(head)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected {head}(...), got {line:?}")))?;
    inner
        .split(',')
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad field {kv:?}")))?;
            Ok((k.trim(), v.trim()))
        })
        .collect()
}

fn field<'a>(fields: &[(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    fields
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Parse(format!("missing field {key}")))
}

fn number(fields: &[(&str, &str)], key: &str) -> Result<usize> {
    let v = field(fields, key)?;
    v.parse().map_err(|_| Error::Parse(format!("field {key}: {v:?} is not an index")))
}

fn factor(fields: &[(&str, &str)], key: &str) -> Result<Factor> {
    match field(fields, key)? {
        "ONE" => Ok(Factor::One),
        _ => number(fields, key).map(Factor::Elem),
    }
}

/// Whether `w` satisfies all four condition families.
pub fn verify_witness(s: &Semigroup, w: &WitnessTree) -> Result<bool> {
    Ok(w.violations(s)?.is_empty())
}

/// A witness for `y ∈ ⇑x` of depth equal to the first stage containing `y`.
pub fn build_witness(s: &Semigroup, x: usize, y: usize) -> Result<WitnessTree> {
    if x >= s.order() {
        return Err(Error::ElementOutOfRange(x));
    }
    if y >= s.order() {
        return Err(Error::ElementOutOfRange(y));
    }
    build_from_trace(s, &up_class_traced(s, x), x, y)
}

/// Like [`build_witness`], reusing a trace already computed for `x`.
pub fn build_from_trace(s: &Semigroup, trace: &UpClassTrace, x: usize, y: usize) -> Result<WitnessTree> {
    let depth = trace.entry[y].ok_or(Error::NotAbove { x, y })?;
    if depth > MAX_WITNESS_DEPTH {
        return Err(Error::WitnessTooDeep(depth));
    }
    let mut nodes = BTreeMap::new();
    grow(s, trace, y, depth, Address::root(), &mut nodes);
    let w = WitnessTree {
        depth,
        base_x: x,
        root_y: y,
        nodes,
    };
    debug_assert!(w.violations(s).map(|v| v.is_empty()).unwrap_or(false));
    Ok(w)
}

/// Builds the subtree of height `height` rooted at `elem`, whose entry stage
/// is at most `height`.
fn grow(
    s: &Semigroup,
    trace: &UpClassTrace,
    elem: usize,
    height: usize,
    addr: Address,
    nodes: &mut BTreeMap<Address, WitnessNode>,
) {
    let entry = trace.entry[elem].expect("element lies in the upper class");
    debug_assert!(entry <= height);
    if height == 0 {
        nodes.insert(
            addr,
            WitnessNode {
                x: elem,
                y: elem,
                a: Factor::One,
                b: Factor::One,
            },
        );
        return;
    }
    let (node, u, v) = if entry == height {
        let sw = trace.via[elem].expect("entered elements carry a sandwich");
        let node = WitnessNode {
            x: elem,
            y: s.mul(sw.u, sw.v),
            a: sw.a,
            b: sw.b,
        };
        (node, sw.u, sw.v)
    } else {
        // already present one stage earlier: elem·elem = elem·elem·ONE
        let node = WitnessNode {
            x: elem,
            y: s.mul(elem, elem),
            a: Factor::Elem(elem),
            b: Factor::One,
        };
        (node, elem, elem)
    };
    nodes.insert(addr.clone(), node);
    grow(s, trace, u, height - 1, addr.child(false), nodes);
    grow(s, trace, v, height - 1, addr.child(true), nodes);
}
