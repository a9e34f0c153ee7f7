//! Left-side configurations `G_L` from the case analysis of Lemmas 3 to 9,
//! with the coefficients printed alongside them.
//!
//! Faces use the lemma vertex names: `f1 = a1a2b1`, `f1' = a2a3b2`,
//! `f2 = b1b2a2`, `f3 = b1b2c1`, `f4 = b2c1c2`, `f5 = c1c2d1`, `f6 = c2d1d2`.
//! Pendant faces are named `e`, `g`, `h`, `h1`, `h2`, `k1`, `k2`, `d0`, `d3`,
//! `c3` as in the subcase descriptions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Mop, Side};
use crate::error::{Error, Result};
use crate::profile::DTerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Reconstruction {
    Exact,
    Ambiguous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Relation {
    /// `∂4(G)` equals the expression.
    Eq,
    /// `∂4(G)` is at most the expression.
    Le,
}

/// A printed `∂4(G)` display: `relation` applied to `sum coeff * term`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DDisplay {
    pub relation: Relation,
    pub terms: Vec<(u64, DTerm)>,
}

impl DDisplay {
    /// Terms with repeated entries merged, sorted by term.
    pub fn normalized(&self) -> Vec<(u64, DTerm)> {
        let mut out: Vec<(u64, DTerm)> = Vec::new();
        for &(c, t) in &self.terms {
            match out.iter_mut().find(|(_, x)| *x == t) {
                Some((acc, _)) => *acc += c,
                None => out.push((c, t)),
            }
        }
        out.sort_by_key(|a| a.1);
        out
    }
}

impl FromStr for DTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<DTerm> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad deficit term {s:?}"));
        let digit = |c: char| c.to_digit(10).map(|d| d as usize).ok_or_else(bad);
        match s {
            "D11" => Ok(DTerm::D11),
            _ => {
                let (head, sup) = s.split_once('^').ok_or_else(bad)?;
                let sup: Vec<char> = sup.chars().collect();
                match (head, sup.as_slice()) {
                    ("D10", [k]) => Ok(DTerm::D10(digit(*k)?)),
                    ("D01", [k]) => Ok(DTerm::D01(digit(*k)?)),
                    ("D00", [k, l]) => Ok(DTerm::D00(digit(*k)?, digit(*l)?)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// `"5 D11 + 2 D10^4 + D00^33"`.
fn parse_terms(s: &str) -> Result<Vec<(u64, DTerm)>> {
    s.split('+')
        .map(|item| {
            let item = item.trim();
            let split = item
                .find('D')
                .ok_or_else(|| Error::Parse(format!("bad term {item:?}")))?;
            let (c, t) = item.split_at(split);
            let c = match c.trim() {
                "" => 1,
                c => c
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {item:?}")))?,
            };
            Ok((c, t.parse()?))
        })
        .collect()
}

impl fmt::Display for DDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.relation {
            Relation::Eq => "= ",
            Relation::Le => "<= ",
        })?;
        for (i, (c, t)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} {t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GadgetSpec {
    pub id: String,
    /// Lemma, case and subcase the configuration comes from.
    pub source: String,
    /// Faces of `G_L` by vertex name; empty when no shape is reconstructed.
    pub triangles: Vec<[String; 3]>,
    pub boundary: (String, String),
    pub reconstruction: Reconstruction,
    /// Printed `(c00, c01, c10)`; `None` for ambiguous entries.
    pub expected_i: Option<[u64; 3]>,
    pub expected_d: Option<DDisplay>,
    /// Printed values of ambiguous entries, kept for reference only.
    pub reference_i: Option<[u64; 3]>,
    pub reference_d: Option<DDisplay>,
    pub note: Option<String>,
}

/// A gadget instantiated as a side with named vertices.
#[derive(Clone, Debug)]
pub struct BuiltGadget {
    pub side: Side,
    /// `names[local]`.
    pub names: Vec<String>,
}

impl GadgetSpec {
    pub fn is_exact(&self) -> bool {
        self.reconstruction == Reconstruction::Exact
    }

    pub fn has_shape(&self) -> bool {
        !self.triangles.is_empty()
    }

    /// Printed coefficient triple, whether expected or reference.
    pub fn printed_i(&self) -> Option<[u64; 3]> {
        self.expected_i.or(self.reference_i)
    }

    pub fn printed_d(&self) -> Option<&DDisplay> {
        self.expected_d.as_ref().or(self.reference_d.as_ref())
    }

    pub fn build(&self) -> Result<BuiltGadget> {
        if !self.has_shape() {
            return Err(Error::InvalidMop(format!(
                "gadget {} has no reconstructed shape",
                self.id
            )));
        }
        fn id<'a>(names: &mut Vec<&'a str>, x: &'a str) -> usize {
            match names.iter().position(|&n| n == x) {
                Some(i) => i,
                None => {
                    names.push(x);
                    names.len() - 1
                }
            }
        }
        let mut names: Vec<&str> = Vec::new();
        let mut tris: Vec<[usize; 3]> = Vec::new();
        for [a, b, c] in &self.triangles {
            tris.push([id(&mut names, a), id(&mut names, b), id(&mut names, c)]);
        }
        let u = id(&mut names, &self.boundary.0);
        let v = id(&mut names, &self.boundary.1);
        let (mop, pos) = Mop::from_triangles(names.len(), &tris)?;
        let mut by_pos = vec![String::new(); names.len()];
        for (i, n) in names.iter().enumerate() {
            by_pos[pos[i]] = n.to_string();
        }
        Ok(BuiltGadget {
            side: Side::from_mop(mop, pos[u], pos[v])?,
            names: by_pos,
        })
    }
}

const F1: [&str; 3] = ["a1", "a2", "b1"];
const F1P: [&str; 3] = ["a2", "a3", "b2"];
const F2: [&str; 3] = ["b1", "b2", "a2"];
const F3: [&str; 3] = ["b1", "b2", "c1"];
const F4: [&str; 3] = ["b2", "c1", "c2"];
const F5: [&str; 3] = ["c1", "c2", "d1"];
const F6: [&str; 3] = ["c2", "d1", "d2"];

const REDUCED_D: &str = "2 D11 + D10^3 + D01^3 + D00^22";

struct Entry {
    id: &'static str,
    source: &'static str,
    tris: Vec<[&'static str; 3]>,
    boundary: (&'static str, &'static str),
    printed_i: [u64; 3],
    printed_d: Option<(Relation, &'static str)>,
    ambiguous: bool,
    note: Option<&'static str>,
}

fn with(base: &[[&'static str; 3]], extra: &[[&'static str; 3]]) -> Vec<[&'static str; 3]> {
    base.iter().chain(extra).copied().collect()
}

fn entries() -> Vec<Entry> {
    use Relation::{Eq, Le};
    let base = [F1, F1P, F2, F3];
    let b = with(&base, &[F4]);
    let c = with(&b, &[F5]);
    let e = with(&c, &[F6]);
    let d3 = ["d1", "d2", "d3"];
    let e_c3 = ["c2", "d2", "c3"];
    let exact = |id, source, tris, boundary, printed_i, printed_d| Entry {
        id,
        source,
        tris,
        boundary,
        printed_i,
        printed_d,
        ambiguous: false,
        note: None,
    };
    vec![
        exact(
            "L3",
            "Lemma 3",
            with(&base, &[["b1", "c1", "e"], ["b1", "e", "h1"], ["e", "c1", "h2"]]),
            ("b2", "c1"),
            [29, 10, 10],
            Some((Eq, "5 D11 + 2 D10^4 + D10^3 + 2 D01^4 + D01^3 + D00^44 + D00^33")),
        ),
        exact(
            "L4",
            "Lemma 4",
            with(&base, &[["b1", "c1", "e"]]),
            ("b2", "c1"),
            [12, 5, 4],
            Some((Eq, "3 D11 + 2 D10^3 + D10^2 + D01^4 + D01^3 + D00^32")),
        ),
        Entry {
            id: "L4-reduced",
            source: "Lemma 4, reduced graph",
            tris: vec![F2, F3, ["b1", "c1", "e"]],
            boundary: ("b2", "c1"),
            printed_i: [5, 2, 2],
            printed_d: Some((Eq, REDUCED_D)),
            ambiguous: true,
            note: Some("the reduced graph is named by a garbled phrase; shape inferred as G_L without a1, a3"),
        },
        exact(
            "L5.1.1",
            "Lemma 5, Case 1, Subcase 1",
            with(&b, &[["b2", "c2", "e"]]),
            ("c1", "c2"),
            [16, 7, 10],
            Some((Eq, "4 D11 + 2 D10^3 + D10^2 + 3 D01^3 + D01^2 + 2 D00^22 + D00^11")),
        ),
        exact(
            "L5.1.1-reduced",
            "Lemma 5, Case 1, Subcase 1, reduced graph",
            vec![F3, F4, ["b2", "c2", "e"]],
            ("c1", "c2"),
            [5, 2, 2],
            None,
        ),
        exact(
            "L5.1.2",
            "Lemma 5, Case 1, Subcase 2",
            with(&b, &[["b2", "c2", "e"], ["b2", "e", "h1"], ["e", "c2", "h2"]]),
            ("c1", "c2"),
            [39, 14, 25],
            Some((Eq, "7 D11 + 3 D10^4 + D10^3 + 4 D01^4 + D01^3 + 2 D00^12 + D00^01")),
        ),
        exact(
            "L5.1.3",
            "Lemma 5, Case 1, Subcase 3",
            with(
                &b,
                &[["b2", "c2", "e"], ["e", "c2", "g"], ["e", "g", "h1"], ["g", "c2", "h2"]],
            ),
            ("c1", "c2"),
            [59, 14, 35],
            Some((Eq, "11 D11 + 6 D01^3 + 2 D01^2 + 3 D10^4 + D10^3 + 2 D00^24 + 2 D00^13")),
        ),
        exact(
            "L5.1.4",
            "Lemma 5, Case 1, Subcase 4",
            with(
                &b,
                &[["b2", "c2", "e"], ["b2", "e", "g"], ["b2", "g", "h1"], ["g", "e", "h2"]],
            ),
            ("c1", "c2"),
            [53, 35, 35],
            None,
        ),
        exact(
            "L5.2.1",
            "Lemma 5, Case 2, Subcase 1",
            with(&b, &[["c1", "c2", "e"]]),
            ("b2", "c2"),
            [19, 7, 4],
            Some((Eq, "5 D11 + 3 D10^3 + D01^4 + D00^42")),
        ),
        exact(
            "L5.2.1-reduced",
            "Lemma 5, Case 2, Subcase 1, reduced graph",
            vec![F3, F4, ["c1", "c2", "e"]],
            ("b2", "c2"),
            [5, 2, 2],
            Some((Eq, REDUCED_D)),
        ),
        exact(
            "L5.2.2",
            "Lemma 5, Case 2, Subcase 2",
            with(&b, &[["c1", "c2", "e"], ["c1", "e", "h1"], ["e", "c2", "h2"]]),
            ("b2", "c2"),
            [45, 14, 10],
            Some((Eq, "8 D11 + 3 D10^4 + 2 D10^3 + 3 D01^4 + D00^43")),
        ),
        exact(
            "L5.2.3",
            "Lemma 5, Case 2, Subcase 3",
            with(
                &b,
                &[["c1", "c2", "e"], ["e", "c2", "g"], ["e", "g", "h1"], ["g", "c2", "h2"]],
            ),
            ("b2", "c2"),
            [74, 14, 14],
            Some((Eq, "13 D11 + 3 D10^4 + 3 D01^4 + D00^44")),
        ),
        exact(
            "L5.2.4",
            "Lemma 5, Case 2, Subcase 4",
            with(
                &b,
                &[["c1", "c2", "e"], ["c1", "e", "g"], ["c1", "g", "h1"], ["g", "e", "h2"]],
            ),
            ("b2", "c2"),
            [59, 35, 14],
            None,
        ),
        exact(
            "L6",
            "Lemma 6",
            base.to_vec(),
            ("b2", "c1"),
            [7, 5, 2],
            Some((Eq, "3 D11 + D01^4")),
        ),
        exact(
            "L7.1.1a",
            "Lemma 7, Case 1, Subcase 1a",
            with(&c, &[["c1", "d1", "d0"]]),
            ("c2", "d1"),
            [23, 9, 14],
            Some((Eq, "7 D11 + 4 D10^3 + 2 D10^2 + 3 D01^3 + 3 D01^2 + 3 D00^22 + D00^12")),
        ),
        exact(
            "L7.1.1b",
            "Lemma 7, Case 1, Subcase 1b",
            with(&c, &[["c1", "d1", "d0"]]),
            ("c2", "d1"),
            [23, 9, 14],
            Some((Eq, "7 D11 + 4 D10^3 + 2 D10^2 + 3 D01^3 + 3 D01^2 + 3 D00^22 + D00^11")),
        ),
        exact(
            "L7.1.1a-reduced",
            "Lemma 7, Case 1, Subcase 1a, reduced graph",
            vec![F5],
            ("c2", "d1"),
            [2, 1, 1],
            Some((Eq, "D11 + D10^2 + D01^2 + D00^11")),
        ),
        exact(
            "L7.1.1b-reduced",
            "Lemma 7, Case 1, Subcase 1b, reduced graph",
            vec![F4, F5, ["c1", "d1", "d0"]],
            ("c2", "d1"),
            [5, 2, 2],
            None,
        ),
        exact(
            "L7.1.2",
            "Lemma 7, Case 1, Subcase 2",
            with(&c, &[["c1", "d1", "d0"], ["c1", "d0", "h1"], ["d0", "d1", "h2"]]),
            ("c2", "d1"),
            [55, 18, 35],
            None,
        ),
        exact(
            "L7.1.3a",
            "Lemma 7, Case 1, Subcase 3a",
            with(
                &c,
                &[
                    ["c1", "d1", "d0"],
                    ["c1", "d0", "g"],
                    ["g", "d0", "h"],
                    ["g", "h", "k1"],
                    ["h", "d0", "k2"],
                ],
            ),
            ("c2", "d1"),
            [106, 63, 63],
            Some((
                Le,
                "25 D11 + 12 D10^3 + 10 D10^2 + 12 D01^3 + 10 D01^2 + 9 D00^22 + 3 D00^21 + 3 D00^12 + 4 D00^11",
            )),
        ),
        exact(
            "L7.1.3b",
            "Lemma 7, Case 1, Subcase 3b",
            with(
                &c,
                &[
                    ["c1", "d1", "d0"],
                    ["d0", "d1", "g"],
                    ["d0", "g", "h"],
                    ["g", "h", "k1"],
                    ["h", "d0", "k2"],
                ],
            ),
            ("c2", "d1"),
            [116, 45, 63],
            Some((
                Eq,
                "28 D11 + 8 D10^4 + 14 D10^3 + 2 D10^2 + 12 D01^3 + 10 D01^2 + 6 D00^23 + 3 D00^22 + 2 D00^13 + D00^12",
            )),
        ),
        exact(
            "L7.1.4a",
            "Lemma 7, Case 1, Subcase 4a",
            with(
                &c,
                &[
                    ["c1", "d1", "d0"],
                    ["c1", "d0", "g"],
                    ["c1", "g", "h1"],
                    ["g", "d0", "h2"],
                ],
            ),
            ("c2", "d1"),
            [73, 45, 49],
            None,
        ),
        exact(
            "L7.1.4b",
            "Lemma 7, Case 1, Subcase 4b",
            with(
                &c,
                &[
                    ["c1", "d1", "d0"],
                    ["d0", "d1", "g"],
                    ["d0", "g", "h1"],
                    ["g", "d1", "h2"],
                ],
            ),
            ("c2", "d1"),
            [88, 18, 49],
            Some((Le, "18 D11 + 6 D10^4 + 9 D01^3 + 9 D01^2 + 3 D00^23 + D00^13")),
        ),
        exact(
            "L7.2.1",
            "Lemma 7, Case 2, Subcase 1",
            with(&c, &[["c2", "d1", "d2"]]),
            ("c1", "d1"),
            [25, 9, 10],
            Some((Eq, "7 D11 + 4 D10^3 + 2 D01^4 + D01^3 + 2 D00^32 + D00^22")),
        ),
        exact(
            "L7.2.2",
            "Lemma 7, Case 2, Subcase 2",
            with(&c, &[["c2", "d1", "d2"], ["c2", "d2", "h1"], ["d2", "d1", "h2"]]),
            ("c1", "d1"),
            [59, 18, 25],
            Some((Eq, "12 D11 + 4 D10^4 + 3 D10^3 + 4 D01^4 + 4 D01^4 + 2 D00^33 + D00^23")),
        ),
        exact(
            "L7.2.3a",
            "Lemma 7, Case 2, Subcase 3a",
            with(
                &c,
                &[
                    ["c2", "d1", "d2"],
                    ["c2", "d2", "g"],
                    ["d2", "g", "h"],
                    ["g", "h", "k1"],
                    ["h", "d2", "k2"],
                ],
            ),
            ("c1", "d1"),
            [116, 63, 45],
            None,
        ),
        exact(
            "L7.2.3b",
            "Lemma 7, Case 2, Subcase 3b",
            with(
                &c,
                &[
                    ["c2", "d1", "d2"],
                    ["d2", "d1", "g"],
                    ["d2", "g", "h"],
                    ["g", "h", "k1"],
                    ["h", "d2", "k2"],
                ],
            ),
            ("c1", "d1"),
            [130, 45, 45],
            Some((
                Eq,
                "25 D11 + 8 D10^4 + 4 D10^3 + 8 D01^4 + 4 D01^3 + 4 D00^22 + 2 D00^32 + 2 D00^23 + D00^22",
            )),
        ),
        exact(
            "L7.2.4a",
            "Lemma 7, Case 2, Subcase 4a",
            with(
                &c,
                &[
                    ["c2", "d1", "d2"],
                    ["c2", "d2", "g"],
                    ["c2", "g", "h1"],
                    ["g", "d2", "h2"],
                ],
            ),
            ("c1", "d1"),
            [77, 45, 35],
            Some((
                Le,
                "16 D11 + 8 D10^3 + 3 D10^2 + 6 D01^4 + 6 D01^3 + D01^2 + 4 D00^32 + 2 D00^22 + 2 D00^21 + D00^11",
            )),
        ),
        exact(
            "L7.2.4b",
            "Lemma 7, Case 2, Subcase 4b",
            with(
                &c,
                &[
                    ["c2", "d1", "d2"],
                    ["d2", "d1", "g"],
                    ["d2", "g", "h1"],
                    ["g", "d1", "h2"],
                ],
            ),
            ("c1", "d1"),
            [98, 18, 35],
            Some((Le, "18 D11 + 4 D10^4 + 6 D01^4 + 3 D01^3 + 2 D00^34 + 2 D00^24")),
        ),
        exact(
            "L8.1",
            "Lemma 8, Case 1",
            b.clone(),
            ("c1", "c2"),
            [9, 7, 5],
            Some((Eq, "4 D11 + 2 D01^3 + D01^2")),
        ),
        exact(
            "L8.2",
            "Lemma 8, Case 2",
            c.clone(),
            ("c2", "d1"),
            [14, 9, 7],
            Some((Eq, "6 D11 + 3 D01^3 + D01^2")),
        ),
        exact(
            "L8.3",
            "Lemma 8, Case 3",
            b.clone(),
            ("c1", "c2"),
            [9, 7, 5],
            Some((Eq, "4 D11 + 3 D10^2 + 2 D01^3")),
        ),
        exact(
            "L8.3-reduced",
            "Lemma 8, Case 3, reduced graph",
            vec![F3, F4],
            ("c1", "c2"),
            [3, 2, 1],
            Some((Eq, "D11 + D10^2 + D01^3")),
        ),
        exact(
            "L9.1.1",
            "Lemma 9, Case 1, Subcase 1",
            with(&e, &[e_c3]),
            ("d1", "d2"),
            [35, 14, 18],
            Some((Eq, "10 D11 + 6 D10^3 + 3 D10^2 + 4 D01^3 + 4 D01^2 + 4 D00^22")),
        ),
        exact(
            "L9.1.2",
            "Lemma 9, Case 1, Subcase 2",
            with(&e, &[e_c3, ["c2", "c3", "h1"], ["c3", "d2", "h2"]]),
            ("d1", "d2"),
            [70, 28, 45],
            Some((
                Eq,
                "22 D11 + 6 D10^4 + 4 D10^3 + 8 D01^3 + 4 D01^2 + 4 D00^23 + 4 D00^12",
            )),
        ),
        exact(
            "L9.1.3a",
            "Lemma 9, Case 1, Subcase 3a",
            with(&e, &[e_c3, ["c2", "c3", "g"], ["c2", "g", "h1"], ["g", "c3", "h2"]]),
            ("d1", "d2"),
            [98, 70, 63],
            None,
        ),
        exact(
            "L9.1.3b",
            "Lemma 9, Case 1, Subcase 3b",
            with(&e, &[e_c3, ["c3", "d2", "g"], ["c3", "g", "h1"], ["g", "d2", "h2"]]),
            ("d1", "d2"),
            [98, 28, 63],
            Some((Eq, "26 D11 + 10 D10^4 + 12 D01^3 + 8 D01^2 + 4 D00^24")),
        ),
        exact(
            "L9.1.4a",
            "Lemma 9, Case 1, Subcase 4a",
            with(
                &e,
                &[
                    e_c3,
                    ["c2", "c3", "g"],
                    ["c3", "g", "h"],
                    ["c3", "h", "k1"],
                    ["h", "g", "k2"],
                ],
            ),
            ("d1", "d2"),
            [161, 98, 81],
            None,
        ),
        Entry {
            id: "L9.1.4b",
            source: "Lemma 9, Case 1, Subcase 4b",
            tris: with(
                &e,
                &[
                    e_c3,
                    ["c3", "d2", "g"],
                    ["c3", "g", "h"],
                    ["c3", "h", "k1"],
                    ["h", "g", "k2"],
                ],
            ),
            boundary: ("d1", "d2"),
            printed_i: [175, 70, 81],
            printed_d: Some((
                Eq,
                "39 D11 + 12 D10^4 + 14 D10^3 + 16 D01^3 + 16 D01^2 + 8 D00^33 + 4 D00^23",
            )),
            ambiguous: true,
            note: Some("where the end faces attach is underdetermined; one of two readings is kept"),
        },
        Entry {
            id: "L9.1.5a",
            source: "Lemma 9, Case 1, Subcase 5a",
            tris: Vec::new(),
            boundary: ("d1", "d2"),
            printed_i: [245, 126, 126],
            printed_d: None,
            ambiguous: true,
            note: Some("chain of four pendant faces with unspecified attachment"),
        },
        Entry {
            id: "L9.1.5b",
            source: "Lemma 9, Case 1, Subcase 5b",
            tris: Vec::new(),
            boundary: ("d1", "d2"),
            printed_i: [259, 98, 126],
            printed_d: Some((
                Eq,
                "52 D11 + 18 D10^4 + 18 D10^3 + 3 D10^2 + 24 D01^3 + 16 D01^2 + 12 D00^23 + 4 D00^22",
            )),
            ambiguous: true,
            note: Some("chain of four pendant faces with unspecified attachment"),
        },
        exact(
            "L9.1-reduced",
            "Lemma 9, Case 1, reduced graph",
            vec![F5, F6, e_c3],
            ("d1", "d2"),
            [5, 2, 2],
            Some((Eq, REDUCED_D)),
        ),
        exact(
            "L9.2.1",
            "Lemma 9, Case 2, Subcase 1",
            with(&e, &[d3]),
            ("c2", "d2"),
            [37, 14, 14],
            Some((Eq, "10 D11 + 6 D10^3 + 3 D01^4 + D01^3 + 3 D00^32 + D00^22")),
        ),
        exact(
            "L9.2.2",
            "Lemma 9, Case 2, Subcase 2",
            with(&e, &[d3, ["d1", "d3", "h1"], ["d3", "d2", "h2"]]),
            ("c2", "d2"),
            [70, 28, 45],
            Some((
                Eq,
                "16 D11 + 6 D10^4 + 4 D10^3 + 6 D01^4 + 5 D01^3 + D01^2 + 3 D00^23 + D00^12",
            )),
        ),
        exact(
            "L9.2.3a",
            "Lemma 9, Case 2, Subcase 3a",
            with(&e, &[d3, ["d1", "d3", "g"], ["d1", "g", "h1"], ["g", "d3", "h2"]]),
            ("c2", "d2"),
            [116, 70, 49],
            Some((
                Eq,
                "22 D11 + 12 D10^3 + 4 D10^3 + 9 D01^4 + 6 D01^3 + D01^2 + 24 D00^32 + 8 D00^22",
            )),
        ),
        exact(
            "L9.2.3b",
            "Lemma 9, Case 2, Subcase 3b",
            with(&e, &[d3, ["d3", "d2", "g"], ["d3", "g", "h1"], ["g", "d2", "h2"]]),
            ("c2", "d2"),
            [98, 28, 49],
            Some((Eq, "26 D11 + 6 D10^4 + 3 D01^3 + 2 D01^2 + 3 D00^34 + 2 D00^24")),
        ),
        exact(
            "L9.2.4a",
            "Lemma 9, Case 2, Subcase 4a",
            with(
                &e,
                &[
                    d3,
                    ["d1", "d3", "g"],
                    ["d3", "g", "h"],
                    ["g", "h", "k1"],
                    ["h", "d3", "k2"],
                ],
            ),
            ("c2", "d2"),
            [171, 98, 63],
            Some((
                Eq,
                "36 D11 + 18 D10^3 + 14 D10^2 + 12 D01^4 + 10 D01^3 + 2 D01^2 + 9 D00^32 + 3 D00^22",
            )),
        ),
        Entry {
            id: "L9.2.4b",
            source: "Lemma 9, Case 2, Subcase 4b",
            tris: Vec::new(),
            boundary: ("c2", "d2"),
            printed_i: [189, 70, 63],
            printed_d: Some((Eq, "36 D11 + 12 D10^4 + 6 D10^3 + 12 D01^4 + 4 D01^3 + 12 D00^33")),
            ambiguous: true,
            note: Some("position of the second pendant face is underdetermined"),
        },
        Entry {
            id: "L9.2.5a",
            source: "Lemma 9, Case 2, Subcase 5a",
            tris: Vec::new(),
            boundary: ("c2", "d2"),
            printed_i: [259, 126, 98],
            printed_d: Some((
                Eq,
                "52 D11 + 24 D10^3 + 16 D10^2 + 18 D01^4 + 5 D01^3 + 4 D01^2 + 12 D00^32 + 4 D00^22",
            )),
            ambiguous: true,
            note: Some("chain of four pendant faces with unspecified attachment"),
        },
        Entry {
            id: "L9.2.5b",
            source: "Lemma 9, Case 2, Subcase 5b",
            tris: Vec::new(),
            boundary: ("c2", "d2"),
            printed_i: [277, 98, 98],
            printed_d: Some((Eq, "52 D11 + 18 D10^4 + 6 D10^3 + 18 D01^4 + 6 D01^3 + 16 D00^33")),
            ambiguous: true,
            note: Some("chain of four pendant faces with unspecified attachment"),
        },
        exact(
            "L9.2-reduced",
            "Lemma 9, Case 2, reduced graph",
            vec![F5, F6, d3],
            ("c2", "d2"),
            [5, 2, 2],
            Some((Eq, REDUCED_D)),
        ),
    ]
}

/// Every configuration, in lemma order. Exact entries carry their printed
/// coefficients as expectations; ambiguous ones carry them as references.
pub fn gadget_catalog() -> Vec<GadgetSpec> {
    entries()
        .into_iter()
        .map(|e| {
            let d = e.printed_d.map(|(relation, s)| DDisplay {
                relation,
                terms: parse_terms(s).expect("catalog display parses"),
            });
            let (expected_i, expected_d, reference_i, reference_d) = if e.ambiguous {
                (None, None, Some(e.printed_i), d)
            } else {
                (Some(e.printed_i), d, None, None)
            };
            GadgetSpec {
                id: e.id.to_string(),
                source: e.source.to_string(),
                triangles: e.tris.iter().map(|t| t.map(String::from)).collect(),
                boundary: (e.boundary.0.to_string(), e.boundary.1.to_string()),
                reconstruction: if e.ambiguous {
                    Reconstruction::Ambiguous
                } else {
                    Reconstruction::Exact
                },
                expected_i,
                expected_d,
                reference_i,
                reference_d,
                note: e.note.map(String::from),
            }
        })
        .collect()
}

pub fn gadget(id: &str) -> Option<GadgetSpec> {
    gadget_catalog().into_iter().find(|g| g.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;
    use crate::profile::side_is_profile;

    #[test]
    fn every_shape_builds_with_outer_boundary() {
        for g in gadget_catalog().iter().filter(|g| g.has_shape()) {
            let built = g.build().unwrap_or_else(|e| panic!("{}: {e}", g.id));
            let (u, v) = built.side.boundary;
            assert_eq!(built.names[u], g.boundary.0, "{}", g.id);
            assert_eq!(built.names[v], g.boundary.1, "{}", g.id);
            assert_eq!(built.side.n(), g.triangles.len() + 2);
        }
    }

    #[test]
    fn printed_examples() {
        assert_eq!(gadget("L3").unwrap().expected_i, Some([29, 10, 10]));
        assert_eq!(gadget("L6").unwrap().expected_i, Some([7, 5, 2]));
        assert_eq!(gadget("L8.1").unwrap().expected_i, Some([9, 7, 5]));
        let amb = gadget("L9.1.5a").unwrap();
        assert_eq!(amb.expected_i, None);
        assert_eq!(amb.reference_i, Some([245, 126, 126]));
    }

    #[test]
    fn lemma6_coefficients_recomputed() {
        let o = Oracle::default();
        let s = gadget("L6").unwrap().build().unwrap().side;
        assert_eq!(side_is_profile(&o, &s).unwrap().as_u64(), Some([7, 5, 2]));
    }

    #[test]
    fn term_parsing() {
        let t = parse_terms("5 D11 + 2 D10^4 + D00^33").unwrap();
        assert_eq!(t, vec![(5, DTerm::D11), (2, DTerm::D10(4)), (1, DTerm::D00(3, 3))]);
        assert!(parse_terms("2 D12").is_err());
        assert!("D00^3".parse::<DTerm>().is_err());
    }

    #[test]
    fn catalog_serializes() {
        let json = serde_json::to_string(&gadget_catalog()).unwrap();
        assert!(json.contains("\"expectedI\":[29,10,10]"));
        assert!(json.contains("\"reconstruction\":\"ambiguous\""));
    }
}
