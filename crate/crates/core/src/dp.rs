//! Exact counting by dynamic programming: over the weak dual of a
//! triangulation (bags are faces), over the edges of a tree, and around a
//! cycle. Tables run in checked `u128` and are recomputed with big integers
//! if any product overflows.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{members, Graph};
use crate::mop::Mop;
use crate::oracle::Count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "mode", content = "k")]
pub enum Mode {
    Is,
    Kds(usize),
}

/// Rooted tree decomposition. Each vertex is forgotten at exactly one bag,
/// the topmost bag containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    pub forget: Vec<Vec<usize>>,
    /// Bags in post-order: children before their parent, root last.
    pub order: Vec<usize>,
}

impl Decomposition {
    pub fn root(&self) -> usize {
        *self.order.last().expect("decomposition has a bag")
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.bags.len()];
        for (b, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(b);
            }
        }
        ch
    }

    /// Checks edge coverage, connectivity of every vertex's bags and the
    /// forget schedule.
    pub fn validate(&self, n: usize, edges: &[(usize, usize)]) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidMop(m));
        for &(a, b) in edges {
            if !self.bags.iter().any(|bag| bag.contains(&a) && bag.contains(&b)) {
                return bad(format!("edge {a}-{b} in no bag"));
            }
        }
        let mut forgotten = vec![0usize; n];
        for (b, fs) in self.forget.iter().enumerate() {
            for &v in fs {
                if !self.bags[b].contains(&v) {
                    return bad(format!("vertex {v} forgotten outside its bag"));
                }
                forgotten[v] += 1;
            }
        }
        if let Some(v) = forgotten.iter().position(|&c| c != 1) {
            return bad(format!("vertex {v} forgotten {} times", forgotten[v]));
        }
        // The bags holding v are connected iff exactly one of them has a
        // parent not holding v.
        for v in 0..n {
            let tops = (0..self.bags.len())
                .filter(|&b| self.bags[b].contains(&v))
                .filter(|&b| match self.parent[b] {
                    Some(p) => !self.bags[p].contains(&v),
                    None => true,
                })
                .count();
            if tops != 1 {
                return bad(format!("bags of vertex {v} are not connected"));
            }
        }
        Ok(())
    }
}

/// Bags are the faces. Each bag is stored as `[a, b, c]` where `ab` is the
/// edge towards the parent and `c` is forgotten there; the root hangs off
/// an outer edge of an end face and also forgets `a` and `b`.
pub fn decomposition_of_mop(m: &Mop) -> Decomposition {
    let dual = m.weak_dual();
    let adj = dual.adjacency();
    let nf = dual.faces.len();
    let root = dual.end_faces()[0];
    let f = dual.faces[root];
    let (a, b) = [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])]
        .into_iter()
        .find(|&(x, y)| m.is_outer_edge(x, y))
        .expect("an end face has an outer edge");
    let apex = |face: [usize; 3], x: usize, y: usize| *face.iter().find(|&&z| z != x && z != y).unwrap();

    let mut bags = vec![Vec::new(); nf];
    let mut parent = vec![None; nf];
    let mut forget = vec![Vec::new(); nf];
    let c = apex(f, a, b);
    bags[root] = vec![a, b, c];
    forget[root] = vec![c, a, b];
    let mut pre = Vec::with_capacity(nf);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        pre.push(x);
        let (pa, pb, pc) = (bags[x][0], bags[x][1], bags[x][2]);
        for &(y, (e0, e1)) in &adj[x] {
            if Some(y) == parent[x] {
                continue;
            }
            let shared = if e0 == pc || e1 == pc {
                if e0 == pa || e1 == pa {
                    pa
                } else {
                    pb
                }
            } else {
                continue;
            };
            let yc = apex(dual.faces[y], shared, pc);
            bags[y] = vec![shared, pc, yc];
            parent[y] = Some(x);
            forget[y] = vec![yc];
            queue.push_back(y);
        }
    }
    pre.reverse();
    Decomposition {
        bags,
        parent,
        forget,
        order: pre,
    }
}

/// Bags are the edges, rooted at the first edge of vertex 0. A one-vertex
/// tree gets the single bag `{0}`.
pub fn decomposition_of_tree(t: &Graph) -> Result<Decomposition> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() == 1 {
        return Ok(Decomposition {
            bags: vec![vec![0]],
            parent: vec![None],
            forget: vec![vec![0]],
            order: vec![0],
        });
    }
    let (order, up) = rooted_order(t);
    // bag of vertex v (v != 0) is the edge (up[v], v)
    let mut bag_of = vec![usize::MAX; t.n()];
    let mut bags = Vec::new();
    for &v in order.iter().skip(1) {
        bag_of[v] = bags.len();
        bags.push(vec![up[v], v]);
    }
    let root_bag = bag_of[order[1]];
    let mut parent = vec![None; bags.len()];
    let mut forget = vec![Vec::new(); bags.len()];
    for &v in order.iter().skip(1) {
        let b = bag_of[v];
        forget[b].push(v);
        if b != root_bag {
            let p = up[v];
            parent[b] = Some(if p == 0 { root_bag } else { bag_of[p] });
        }
    }
    forget[root_bag].push(0);
    let mut post: Vec<usize> = order
        .iter()
        .skip(1)
        .rev()
        .map(|&v| bag_of[v])
        .filter(|&b| b != root_bag)
        .collect();
    post.push(root_bag);
    Ok(Decomposition {
        bags,
        parent,
        forget,
        order: post,
    })
}

/// BFS order from vertex 0 and the parent of each vertex.
fn rooted_order(t: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut up = vec![usize::MAX; t.n()];
    let mut order = vec![0];
    up[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for w in members(t.neighbors(v)) {
            if up[w] == usize::MAX {
                up[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    (order, up)
}

trait Num: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn into_count(self) -> Count;
}

impl Num for u128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn into_count(self) -> Count {
        Count::from(self)
    }
}

impl Num for BigUint {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn into_count(self) -> Count {
        self
    }
}

/// State index: 0 is "selected", `1 + s` is "unselected with `s` selected
/// neighbors so far" (capped at `cap`). Independent sets use `k = cap = 0`
/// and forbid two adjacent selected vertices.
#[derive(Clone, Copy)]
struct Rule {
    k: usize,
    cap: usize,
    independent: bool,
}

impl Rule {
    fn of(mode: Mode, cap: usize) -> Result<Rule> {
        match mode {
            Mode::Is => Ok(Rule {
                k: 0,
                cap: 0,
                independent: true,
            }),
            Mode::Kds(0) => Err(Error::BadThreshold(0)),
            Mode::Kds(k) => Ok(Rule {
                k,
                cap: cap.max(k),
                independent: false,
            }),
        }
    }

    fn states(&self) -> usize {
        self.cap + 2
    }

    fn bump(&self, x: usize, by: usize) -> usize {
        if x == 0 {
            0
        } else {
            1 + (x - 1 + by).min(self.cap)
        }
    }

    fn settled(&self, x: usize, extra: usize) -> bool {
        x == 0 || x - 1 + extra >= self.k
    }
}

fn run_mop<N: Num>(d: &Decomposition, rule: Rule) -> Option<N> {
    let s = rule.states();
    let leaf: Vec<N> = (0..s * s)
        .map(|i| if i / s <= 1 && i % s <= 1 { N::unit() } else { N::nil() })
        .collect();
    let children = d.children();
    let mut tables: Vec<Option<Vec<N>>> = vec![None; d.bags.len()];
    for &x in &d.order {
        let bag = &d.bags[x];
        let (a, b) = (bag[0], bag[1]);
        let mut t1 = None;
        let mut t2 = None;
        for &y in &children[x] {
            let t = tables[y].take().expect("child before parent");
            if d.bags[y][0] == a {
                t1 = Some(t);
            } else {
                debug_assert_eq!(d.bags[y][0], b);
                t2 = Some(t);
            }
        }
        let t1 = t1.as_ref().unwrap_or(&leaf);
        let t2 = t2.as_ref().unwrap_or(&leaf);
        let mut out = vec![N::nil(); s * s];
        for xa in 0..s {
            for xc1 in 0..s {
                let v1 = &t1[xa * s + xc1];
                if v1.is_nil() {
                    continue;
                }
                let c_in = xc1 == 0;
                for xb in 0..s {
                    for xc2 in 0..s {
                        if (xc2 == 0) != c_in {
                            continue;
                        }
                        let v2 = &t2[xb * s + xc2];
                        if v2.is_nil() {
                            continue;
                        }
                        let (a_in, b_in) = (xa == 0, xb == 0);
                        if rule.independent && c_in && (a_in || b_in) {
                            continue;
                        }
                        if !c_in && xc1 + xc2 - 2 + usize::from(a_in) + usize::from(b_in) < rule.k {
                            continue;
                        }
                        let ya = rule.bump(xa, c_in as usize);
                        let yb = rule.bump(xb, c_in as usize);
                        let slot = &mut out[ya * s + yb];
                        *slot = slot.add(&v1.mul(v2)?)?;
                    }
                }
            }
        }
        tables[x] = Some(out);
    }
    let top = tables[d.root()].take()?;
    let mut total = N::nil();
    for xa in 0..s {
        for xb in 0..s {
            let (a_in, b_in) = (xa == 0, xb == 0);
            if rule.independent && a_in && b_in {
                continue;
            }
            if rule.settled(xa, b_in as usize) && rule.settled(xb, a_in as usize) {
                total = total.add(&top[xa * s + xb])?;
            }
        }
    }
    Some(total)
}

fn count_mop(m: &Mop, rule: Rule) -> Count {
    let d = decomposition_of_mop(m);
    match run_mop::<u128>(&d, rule) {
        Some(c) => c.into_count(),
        None => run_mop::<BigUint>(&d, rule).expect("big integers do not overflow"),
    }
}

pub fn count_is_fast(m: &Mop) -> Count {
    count_mop(m, Rule::of(Mode::Is, 0).expect("is rule"))
}

pub fn count_kds_fast(m: &Mop, k: usize) -> Result<Count> {
    count_kds_fast_with_cap(m, k, k)
}

/// Saturation is tracked up to `cap` (raised to `k` if smaller). Any
/// `cap >= k` gives the same count.
pub fn count_kds_fast_with_cap(m: &Mop, k: usize, cap: usize) -> Result<Count> {
    Ok(count_mop(m, Rule::of(Mode::Kds(k), cap)?))
}

pub fn count_fast(m: &Mop, mode: Mode) -> Result<Count> {
    match mode {
        Mode::Is => Ok(count_is_fast(m)),
        Mode::Kds(k) => count_kds_fast(m, k),
    }
}

fn run_tree<N: Num>(t: &Graph, rule: Rule) -> Option<N> {
    let s = rule.states();
    let (order, up) = rooted_order(t);
    let mut tables: Vec<Vec<N>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        // only "selected" and "unselected, nothing yet" are possible alone
        let mut cur: Vec<N> = (0..s).map(|x| if x <= 1 { N::unit() } else { N::nil() }).collect();
        for w in members(t.neighbors(v)).filter(|&w| w != 0 && up[w] == v) {
            let child = std::mem::take(&mut tables[w]);
            let mut next = vec![N::nil(); s];
            for (xv, cv) in cur.iter().enumerate() {
                if cv.is_nil() {
                    continue;
                }
                for (xw, cw) in child.iter().enumerate() {
                    if cw.is_nil() {
                        continue;
                    }
                    let (v_in, w_in) = (xv == 0, xw == 0);
                    if rule.independent && v_in && w_in {
                        continue;
                    }
                    if !rule.settled(xw, v_in as usize) {
                        continue;
                    }
                    let y = rule.bump(xv, w_in as usize);
                    next[y] = next[y].add(&cv.mul(cw)?)?;
                }
            }
            cur = next;
        }
        tables[v] = cur;
    }
    let mut total = N::nil();
    for (x, c) in tables[0].iter().enumerate() {
        if rule.settled(x, 0) {
            total = total.add(c)?;
        }
    }
    Some(total)
}

/// IS or k-DS count of a tree, rooted at vertex 0.
pub fn count_on_tree(t: &Graph, mode: Mode) -> Result<Count> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let rule = Rule::of(mode, 0)?;
    Ok(match run_tree::<u128>(t, rule) {
        Some(c) => c.into_count(),
        None => run_tree::<BigUint>(t, rule).expect("big integers do not overflow"),
    })
}

/// IS or k-DS count of the cycle `C_n` (n >= 3), by fixing the first two
/// vertices and walking around.
pub fn count_on_cycle(n: usize, mode: Mode) -> Result<Count> {
    if n < 3 {
        return Err(Error::OutOfRange {
            family: "cycle",
            n,
            min: 3,
            max: usize::MAX,
        });
    }
    let ok = |left: bool, me: bool, right: bool| match mode {
        Mode::Is => !(me && (left || right)),
        Mode::Kds(k) => me || left as usize + right as usize >= k,
    };
    if let Mode::Kds(0) = mode {
        return Err(Error::BadThreshold(0));
    }
    let mut total = Count::zero();
    for m0 in [false, true] {
        for m1 in [false, true] {
            // ways[(prev, cur)] after placing vertex i
            let mut ways = [[Count::zero(), Count::zero()], [Count::zero(), Count::zero()]];
            ways[m0 as usize][m1 as usize] = Count::one();
            for _ in 2..n {
                let mut next = [[Count::zero(), Count::zero()], [Count::zero(), Count::zero()]];
                for p in [false, true] {
                    for c in [false, true] {
                        let w = &ways[p as usize][c as usize];
                        if w.is_zero() {
                            continue;
                        }
                        for x in [false, true] {
                            // vertex i-1 = c now has both neighbors decided
                            if ok(p, c, x) {
                                next[c as usize][x as usize] += w;
                            }
                        }
                    }
                }
                ways = next;
            }
            for p in [false, true] {
                for c in [false, true] {
                    // c is vertex n-1, p is n-2
                    if ok(p, c, m0) && ok(c, m0, m1) {
                        total += &ways[p as usize][c as usize];
                    }
                }
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    fn all_mops(n: usize) -> Vec<Mop> {
        // tiny local generator, independent of the enumeration module
        fn rec(lo: usize, hi: usize, seq: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if hi - lo < 2 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for j in lo + 1..hi {
                for l in rec(lo, j, seq) {
                    for r in rec(j, hi, seq) {
                        let mut c = l.clone();
                        c.extend(r);
                        for (x, y) in [(lo, j), (j, hi)] {
                            if y - x >= 2 {
                                let (p, q) = (seq[x], seq[y]);
                                c.push((p.min(q), p.max(q)));
                            }
                        }
                        out.push(c);
                    }
                }
            }
            out
        }
        let seq: Vec<usize> = (1..n).chain([0]).collect();
        rec(0, n - 1, &seq)
            .into_iter()
            .map(|c| Mop::new(n, &c).unwrap())
            .collect()
    }

    #[test]
    fn small_decompositions() {
        let d = decomposition_of_mop(&Mop::triangle());
        assert_eq!(d.bags.len(), 1);
        let mut b = d.bags[0].clone();
        b.sort();
        assert_eq!(b, vec![0, 1, 2]);
        let fan = Mop::fan(5).unwrap();
        let d = decomposition_of_mop(&fan);
        assert_eq!(d.bags.len(), 3);
        assert_eq!(d.parent.iter().filter(|p| p.is_none()).count(), 1);
        d.validate(5, &fan.edges()).unwrap();
    }

    #[test]
    fn decompositions_valid_up_to_twelve() {
        for n in 3..=9 {
            for m in all_mops(n) {
                decomposition_of_mop(&m).validate(n, &m.edges()).unwrap();
            }
        }
        let m: Mop = "12;0-2,0-3,3-11,4-11,4-6,6-11,7-11,7-9,9-11".parse().unwrap();
        decomposition_of_mop(&m).validate(12, &m.edges()).unwrap();
    }

    #[test]
    fn matches_oracle_small() {
        let o = Oracle::default();
        for n in 3..=8 {
            for m in all_mops(n) {
                let g = m.graph().unwrap();
                assert_eq!(count_is_fast(&m), o.count_is(&g).unwrap(), "{m}");
                for k in 1..=5 {
                    assert_eq!(count_kds_fast(&m, k).unwrap(), o.count_kds(&g, k).unwrap(), "{m} k={k}");
                }
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(count_is_fast(&Mop::triangle()), 4u32.into());
        assert_eq!(count_kds_fast(&Mop::triangle(), 4).unwrap(), 1u32.into());
        assert_eq!(count_kds_fast(&Mop::triangle(), 0), Err(Error::BadThreshold(0)));
    }

    #[test]
    fn cap_does_not_matter() {
        let m: Mop = "9;0-2,0-3,3-8,4-8,4-6,6-8".parse().unwrap();
        for k in 2..=4 {
            let base = count_kds_fast(&m, k).unwrap();
            for cap in k..k + 4 {
                assert_eq!(count_kds_fast_with_cap(&m, k, cap).unwrap(), base);
            }
        }
    }

    #[test]
    fn fan_of_fifty() {
        // hub in gives 1, hub out gives i(P_{n-1})
        let fib = |m: usize| {
            let (mut a, mut b) = (Count::one(), Count::from(2u32));
            for _ in 0..m {
                let c = &a + &b;
                a = b;
                b = c;
            }
            a
        };
        for n in [5, 12, 50, 200] {
            let want = fib(n - 1) + Count::one();
            assert_eq!(count_is_fast(&Mop::fan(n).unwrap()), want, "n={n}");
        }
    }

    #[test]
    fn trees_and_cycles() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(count_on_tree(&p3, Mode::Is).unwrap(), 5u32.into());
        assert_eq!(count_on_tree(&p3, Mode::Kds(2)).unwrap(), 2u32.into());
        assert_eq!(count_on_tree(&Graph::new(1).unwrap(), Mode::Is).unwrap(), 2u32.into());
        assert_eq!(
            count_on_tree(&Graph::new(1).unwrap(), Mode::Kds(2)).unwrap(),
            1u32.into()
        );
        assert_eq!(count_on_tree(&Graph::cycle(4).unwrap(), Mode::Is), Err(Error::NotATree));
        assert_eq!(count_on_cycle(5, Mode::Is).unwrap(), 11u32.into());
        assert_eq!(count_on_cycle(5, Mode::Kds(2)).unwrap(), 11u32.into());
        let o = Oracle::default();
        for n in 3..=12 {
            let c = Graph::cycle(n).unwrap();
            for mode in [Mode::Is, Mode::Kds(1), Mode::Kds(2), Mode::Kds(3)] {
                let want = match mode {
                    Mode::Is => o.count_is(&c).unwrap(),
                    Mode::Kds(k) => o.count_kds(&c, k).unwrap(),
                };
                assert_eq!(count_on_cycle(n, mode).unwrap(), want, "n={n} {mode:?}");
            }
        }
        let spider = Graph::from_edges(8, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (0, 6), (6, 7)]).unwrap();
        for k in 1..=3 {
            assert_eq!(
                count_on_tree(&spider, Mode::Kds(k)).unwrap(),
                o.count_kds(&spider, k).unwrap()
            );
        }
        assert_eq!(count_on_tree(&spider, Mode::Is).unwrap(), o.count_is(&spider).unwrap());
        let d = decomposition_of_tree(&spider).unwrap();
        d.validate(8, &spider.edges()).unwrap();
        decomposition_of_tree(&Graph::new(1).unwrap())
            .unwrap()
            .validate(1, &[])
            .unwrap();
    }

    #[test]
    fn large_counts_promote() {
        let big = count_is_fast(&Mop::fan(300).unwrap());
        assert!(big.bits() > 128);
    }
}
