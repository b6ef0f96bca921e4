use alloc::vec::Vec;

use super::{AvoidMethod, Certificate, UnavoidMethod, Verdict, WindowGraphConfig};
use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::periodic::PeriodicWord;
use crate::set::WordSet;

/// `k^(L-1)`, the node count of the window graph, or `None` on overflow.
pub fn window_nodes(x: &WordSet) -> Option<u128> {
    let k = x.alphabet().size() as u128;
    let l = x.max_len().max(1) as u32;
    k.checked_pow(l - 1)
}

pub(super) fn window_fits(x: &WordSet, cap: u64) -> bool {
    if x.alphabet().size() == 1 {
        return true;
    }
    match window_nodes(x) {
        Some(n) => n <= cap as u128 && n <= u32::MAX as u128 && packed_bits(x) <= 128,
        None => false,
    }
}

fn bits_per_letter(alphabet: Alphabet) -> u32 {
    usize::BITS - (alphabet.size() - 1).max(1).leading_zeros()
}

fn packed_bits(x: &WordSet) -> u32 {
    bits_per_letter(x.alphabet()) * x.max_len() as u32
}

/// One member of the set, aligned to the right end of an `L`-window.
///
/// Slot 0 (the low bits) holds the newest letter of the window.
struct Pattern {
    letters: u128,
    mask: u128,
}

struct Graph {
    k: u32,
    bits: u32,
    /// `k^(L-2)`; zero when `L = 1`.
    high: u32,
    node_len: usize,
    node_mask: u128,
    patterns: Vec<Pattern>,
}

impl Graph {
    fn new(x: &WordSet) -> Graph {
        let k = x.alphabet().size() as u32;
        let bits = bits_per_letter(x.alphabet());
        let l = x.max_len();
        let slot = (1u128 << bits) - 1;
        let patterns = x
            .iter()
            .map(|w| {
                let n = w.len();
                let mut p = Pattern {
                    letters: 0,
                    mask: 0,
                };
                for (j, letter) in w.defined() {
                    let shift = bits * (n - 1 - j) as u32;
                    p.letters |= (letter.0 as u128) << shift;
                    p.mask |= slot << shift;
                }
                p
            })
            .collect();
        let node_len = l - 1;
        Graph {
            k,
            bits,
            high: if l >= 2 { k.pow(l as u32 - 2) } else { 0 },
            node_len,
            node_mask: if node_len == 0 {
                0
            } else {
                u128::MAX >> (128 - bits * node_len as u32)
            },
            patterns,
        }
    }

    /// Base-k node id to packed letters, oldest letter in the high slot.
    fn pack(&self, mut node: u32) -> u128 {
        let mut packed = 0u128;
        for i in 0..self.node_len {
            packed |= ((node % self.k) as u128) << (self.bits * i as u32);
            node /= self.k;
        }
        packed
    }

    #[inline]
    fn allowed(&self, packed: u128, c: u32) -> bool {
        let window = (packed << self.bits) | c as u128;
        self.patterns
            .iter()
            .all(|p| (window ^ p.letters) & p.mask != 0)
    }

    #[inline]
    fn successor(&self, node: u32, c: u32) -> u32 {
        if self.high == 0 {
            0
        } else {
            (node % self.high) * self.k + c
        }
    }

    #[inline]
    fn shift_packed(&self, packed: u128, c: u32) -> u128 {
        ((packed << self.bits) | c as u128) & self.node_mask
    }
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(alloc::vec![0; n.div_ceil(64)])
    }
    #[inline]
    fn get(&self, i: u32) -> bool {
        self.0[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }
    #[inline]
    fn set(&mut self, i: u32) {
        self.0[(i >> 6) as usize] |= 1 << (i & 63);
    }
    #[inline]
    fn clear(&mut self, i: u32) {
        self.0[(i >> 6) as usize] &= !(1 << (i & 63));
    }
}

/// Exact decision on the factor-window graph.
///
/// Nodes are the total words of length `L - 1`; the edge `u -c-> v` exists when
/// no member of the set is compatible with the suffix of `u·c` of its own
/// length. A cycle's edge labels form an avoiding base word. The search is an
/// iterative DFS from nodes in ascending order, trying letters in alphabet
/// order; the first back edge closes the certificate.
pub fn decide_exact(x: &WordSet, cfg: &WindowGraphConfig) -> Result<Verdict> {
    if x.is_trivial() {
        return Ok(Verdict::Unavoidable(UnavoidMethod::Trivial));
    }
    let alphabet = x.alphabet();
    if alphabet.size() == 1 {
        // One node, one possible self-loop.
        let w = PeriodicWord::new(alphabet, alloc::vec![Letter::A])?;
        return Ok(if w.avoids_set(x)? {
            Verdict::Avoidable(Certificate::verify(x, w, AvoidMethod::WindowGraph)?)
        } else {
            Verdict::Unavoidable(UnavoidMethod::WindowGraph)
        });
    }
    if !window_fits(x, cfg.max_nodes) {
        return Err(Error::WindowTooLarge {
            needed: window_nodes(x).unwrap_or(u128::MAX),
            cap: cfg.max_nodes,
        });
    }
    let n = window_nodes(x).expect("checked by window_fits") as u32;
    let g = Graph::new(x);
    match find_cycle(&g, n) {
        None => Ok(Verdict::Unavoidable(UnavoidMethod::WindowGraph)),
        Some(labels) => {
            let base = labels.into_iter().map(|c| Letter(c as u8)).collect();
            let w = PeriodicWord::new(alphabet, base)?;
            Ok(Verdict::Avoidable(Certificate::verify(
                x,
                w,
                AvoidMethod::WindowGraph,
            )?))
        }
    }
}

fn find_cycle(g: &Graph, n: u32) -> Option<Vec<u32>> {
    let mut visited = BitSet::new(n as usize);
    let mut on_stack = BitSet::new(n as usize);
    // (node, next letter to try)
    let mut stack: Vec<(u32, u32)> = Vec::new();

    for start in 0..n {
        if visited.get(start) {
            continue;
        }
        visited.set(start);
        on_stack.set(start);
        stack.push((start, 0));
        let mut packed = g.pack(start);

        while let Some(top) = stack.last_mut() {
            let (node, c) = *top;
            if c == g.k {
                on_stack.clear(node);
                stack.pop();
                if let Some(&(parent, _)) = stack.last() {
                    packed = g.pack(parent);
                }
                continue;
            }
            top.1 += 1;
            if !g.allowed(packed, c) {
                continue;
            }
            let next = g.successor(node, c);
            if on_stack.get(next) {
                let from = stack
                    .iter()
                    .rposition(|&(v, _)| v == next)
                    .expect("node marked on stack");
                let mut labels: Vec<u32> = stack[from..stack.len() - 1]
                    .iter()
                    .map(|&(_, c)| c - 1)
                    .collect();
                labels.push(c);
                return Some(labels);
            }
            if !visited.get(next) {
                visited.set(next);
                on_stack.set(next);
                stack.push((next, 0));
                packed = g.shift_packed(packed, c);
            }
        }
    }
    None
}
