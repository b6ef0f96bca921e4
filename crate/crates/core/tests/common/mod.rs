//! Brute-force avoidability written without the crate's deciders.
#![allow(dead_code)]

use proptest::prelude::*;
use unavoid_core::{Alphabet, PartialWord, WordSet};

/// `None` is a hole.
pub type Raw = Vec<Option<u8>>;

pub fn raw(w: &PartialWord) -> Raw {
    w.symbols().iter().map(|s| s.letter().map(|l| l.0)).collect()
}

fn meets_at(text: &[u8], at: usize, u: &Raw) -> bool {
    u.iter().enumerate().all(|(j, s)| s.is_none_or(|c| text[at + j] == c))
}

/// Whether some member occurs in the finite word `text`.
fn hits(text: &[u8], set: &[Raw]) -> bool {
    set.iter().any(|u| u.len() <= text.len() && (0..=text.len() - u.len()).any(|i| meets_at(text, i, u)))
}

fn digits(mut n: usize, k: usize, len: usize) -> Vec<u8> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = (n % k) as u8;
        n /= k;
    }
    out
}

/// Exact avoidability: a bi-infinite avoider exists iff the graph of
/// member-free windows of length `L` has a cycle.
pub fn avoidable(x: &WordSet) -> bool {
    let k = x.alphabet().size();
    let set: Vec<Raw> = x.iter().map(raw).collect();
    let l = x.max_len().max(2);
    let nodes = k.pow(l as u32 - 1);
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (u, out) in succ.iter_mut().enumerate() {
        let mut text = digits(u, k, l - 1);
        text.push(0);
        for c in 0..k {
            text[l - 1] = c as u8;
            if !hits(&text, &set) {
                out.push((u * k + c) % nodes);
            }
        }
    }
    let mut alive = vec![true; nodes];
    loop {
        let mut changed = false;
        for u in 0..nodes {
            if alive[u] && !succ[u].iter().any(|&v| alive[v]) {
                alive[u] = false;
                changed = true;
            }
        }
        if !changed {
            return alive.iter().any(|&a| a);
        }
    }
}

/// Whether the periodic word with base `base` avoids every member.
pub fn periodic_avoids(base: &[u8], x: &WordSet) -> bool {
    let p = base.len();
    let reach = x.max_len() + p;
    let text: Vec<u8> = (0..reach).map(|i| base[i % p]).collect();
    let set: Vec<Raw> = x.iter().map(raw).collect();
    !(0..p).any(|s| set.iter().any(|u| meets_at(&text, s, u)))
}

/// Some avoider of period exactly `p`, by enumeration.
pub fn avoider_of_period(x: &WordSet, p: usize) -> Option<Vec<u8>> {
    let k = x.alphabet().size();
    (0..k.pow(p as u32)).map(|n| digits(n, k, p)).find(|b| periodic_avoids(b, x))
}

pub fn min_period(x: &WordSet, max: usize) -> Option<usize> {
    (1..=max).find(|&p| avoider_of_period(x, p).is_some())
}

pub fn word_strategy(k: usize, max_len: usize) -> impl Strategy<Value = PartialWord> {
    prop::collection::vec(prop::option::weighted(0.6, 0..k as u8), 1..=max_len).prop_map(|v| {
        let s: String = v.iter().map(|c| c.map_or('-', |c| (b'a' + c) as char)).collect();
        s.parse().unwrap()
    })
}

/// Sets over `k <= 3` letters of `1..=max_words` words of length at most `max_len`.
pub fn set_strategy(max_len: usize, max_words: usize) -> impl Strategy<Value = WordSet> {
    (2..=3usize).prop_flat_map(move |k| {
        prop::collection::vec(word_strategy(k, max_len), 1..=max_words)
            .prop_map(move |ws| WordSet::new(Alphabet::new(k).unwrap(), ws).unwrap())
    })
}
