//! Brute-force oracles shared by the integration tests. None of these call
//! into the code paths they are used to check.

#![allow(dead_code)]

use itertools::Itertools;
use keisler_lab::logic::{Formula, RelSymbol, Term};
use keisler_lab::rational::Rational;
use keisler_lab::structures::Hypergraph;
use num_bigint::BigInt;

/// Truth of a graph formula, `E` read as adjacency of distinct vertices.
pub fn eval_graph(g: &Hypergraph, f: &Formula, objects: &[usize], params: &[usize]) -> bool {
    let val = |t: &Term| match t {
        Term::Obj(i) => objects[*i as usize - 1],
        Term::Param(i) => params[*i as usize - 1],
    };
    match f {
        Formula::Rel { symbol, args } => {
            assert_eq!(*symbol, RelSymbol::E);
            assert_eq!(args.len(), 2);
            let (u, v) = (val(&args[0]), val(&args[1]));
            u != v && g.adjacent(u, v)
        }
        Formula::Eq(a, b) => val(a) == val(b),
        Formula::Not(a) => !eval_graph(g, a, objects, params),
        Formula::And(a, b) => eval_graph(g, a, objects, params) && eval_graph(g, b, objects, params),
        Formula::Or(a, b) => eval_graph(g, a, objects, params) || eval_graph(g, b, objects, params),
    }
}

/// Adjacency rows as bitmasks (graphs with at most 64 vertices).
pub fn masks(g: &Hypergraph) -> Vec<u64> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && g.adjacent(u, v))
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

/// Whether the vertex set `set` (bitmask) spans a clique on `size` vertices.
fn has_clique_in(adj: &[u64], set: u64, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique_in(adj, adj[v] & rest, size - 1) {
            return true;
        }
    }
    false
}

/// Largest subset inducing no `K_{s-1}`, by trying every subset.
pub fn brute_alpha(g: &Hypergraph, s: usize) -> usize {
    let adj = masks(g);
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter(|&set| !has_clique_in(&adj, set, s - 1))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// No `s` vertices with all `r`-subsets edges, checked over every `s`-set.
pub fn brute_free(g: &Hypergraph, s: usize) -> bool {
    let r = g.arity();
    (0..g.vertex_count())
        .combinations(s)
        .all(|set| !set.iter().copied().combinations(r).all(|e| g.has_edge(&e)))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `r!/r^r` from integer arithmetic.
pub fn maxcut_ratio(r: usize) -> Rational {
    Rational::new(factorial(r), BigInt::from(r).pow(r as u32))
}

/// Whether the coloring gives pairwise distinct colors to `edge`.
pub fn splits(edge: &[usize], colors: &[usize]) -> bool {
    edge.iter().map(|&v| colors[v]).all_unique()
}
