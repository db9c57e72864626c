//! Exact vertex colouring by DSATUR backtracking. Used to assign pages for a
//! fixed spine order: pages are colours of the conflict graph.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Colored(Vec<u8>),
    Impossible,
    BudgetExceeded,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    color: Vec<u8>,
    /// `seen[v][c]`: neighbours of `v` currently coloured `c`.
    seen: Vec<[u16; 8]>,
    sat: Vec<u8>,
    preferred: Option<&'a [u8]>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u8, usize, usize)> = None;
        for v in 0..self.adj.len() {
            if self.color[v] != 0 {
                continue;
            }
            let free = self.adj[v].iter().filter(|&&u| self.color[u] == 0).count();
            let key = (self.sat[v], free, usize::MAX - v);
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, iv)| usize::MAX - iv)
    }

    fn assign(&mut self, v: usize, c: u8) {
        self.color[v] = c;
        for &u in self.adj[v].iter() {
            let s = &mut self.seen[u][c as usize];
            if *s == 0 {
                self.sat[u] += 1;
            }
            *s += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        for &u in self.adj[v].iter() {
            let s = &mut self.seen[u][c as usize];
            *s -= 1;
            if *s == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// Returns Some(true) when coloured, Some(false) when exhausted, None on
    /// budget overrun.
    fn run(&mut self, used: u8) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some(v) = self.pick() else {
            return Some(true);
        };
        let limit = (used as usize + 1).min(self.k) as u8;
        let mut order: Vec<u8> = Vec::with_capacity(self.k);
        let top = if self.preferred.is_some() { self.k as u8 } else { limit };
        if let Some(p) = self.preferred {
            if (1..=top).contains(&p[v]) {
                order.push(p[v]);
            }
        }
        for c in 1..=top {
            if !order.contains(&c) {
                order.push(c);
            }
        }
        for c in order {
            if self.seen[v][c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            match self.run(used.max(c)) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.unassign(v);
        }
        Some(false)
    }
}

/// Tries to colour `adj` with colours `1..=k` (k <= 7). `preferred` gives a
/// colour to try first per vertex. `budget` bounds the search nodes.
pub fn color_with(adj: &[Vec<usize>], k: usize, preferred: Option<&[u8]>, budget: u64) -> Outcome {
    assert!(k <= 7, "at most 7 colours supported");
    let n = adj.len();
    if n == 0 {
        return Outcome::Colored(Vec::new());
    }
    if k == 0 {
        return Outcome::Impossible;
    }
    let mut s = Search {
        adj,
        k,
        color: vec![0; n],
        seen: vec![[0; 8]; n],
        sat: vec![0; n],
        preferred,
        nodes: 0,
        budget,
    };
    match s.run(0) {
        Some(true) => Outcome::Colored(s.color),
        Some(false) => Outcome::Impossible,
        None => Outcome::BudgetExceeded,
    }
}

/// Whether `adj` contains four pairwise adjacent vertices, which rules out
/// a 3-colouring.
pub fn has_k4(adj: &[Vec<usize>]) -> bool {
    for u in 0..adj.len() {
        for &v in adj[u].iter().filter(|&&v| v > u) {
            let common: Vec<usize> = adj[v]
                .iter()
                .copied()
                .filter(|&w| w > v && adj[u].contains(&w))
                .collect();
            for (i, &a) in common.iter().enumerate() {
                if common[i + 1..].iter().any(|b| adj[a].contains(b)) {
                    return true;
                }
            }
        }
    }
    false
}

/// Size of a greedily grown clique (a lower bound on the chromatic number).
pub fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let mut best = usize::from(!adj.is_empty());
    for s in 0..adj.len() {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = adj[s].clone();
        cand.sort_by_key(|&u| core::cmp::Reverse(adj[u].len()));
        for u in cand {
            if clique.iter().all(|&w| adj[u].contains(&w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Exact chromatic number with an optimal colouring. `adj` must need at most
/// 7 colours.
pub fn chromatic_number(adj: &[Vec<usize>]) -> (usize, Vec<u8>) {
    if adj.is_empty() {
        return (0, Vec::new());
    }
    let lb = greedy_clique(adj);
    for k in lb..=7 {
        if let Outcome::Colored(c) = color_with(adj, k, None, u64::MAX) {
            return (k, c);
        }
    }
    panic!("conflict graph needs more than 7 colours");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect()
    }

    fn odd_cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()
    }

    #[test]
    fn known_chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(4)).0, 4);
        assert_eq!(chromatic_number(&odd_cycle(7)).0, 3);
        assert_eq!(chromatic_number(&odd_cycle(8)).0, 2);
        assert_eq!(chromatic_number(&vec![vec![]; 3]).0, 1);
    }

    #[test]
    fn k4_detection() {
        assert!(has_k4(&complete(4)));
        assert!(!has_k4(&odd_cycle(5)));
        let mut w = complete(4);
        w[0].retain(|&u| u != 1);
        w[1].retain(|&u| u != 0);
        assert!(!has_k4(&w));
    }

    #[test]
    fn impossible_is_detected() {
        assert_eq!(color_with(&complete(4), 3, None, u64::MAX), Outcome::Impossible);
    }

    #[test]
    fn preferred_colours_are_kept_when_feasible() {
        let adj = odd_cycle(4);
        let pref = [2, 1, 2, 1];
        assert_eq!(
            color_with(&adj, 3, Some(&pref), u64::MAX),
            Outcome::Colored(pref.to_vec())
        );
    }
}
