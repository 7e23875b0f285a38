//! Fixed workloads for the criterion benchmarks in `benches/`.

use platorder_core::{BraidWord, StrandCount};

/// A deterministic mixed-sign word of length `len` on `strands` strands.
pub fn mixed_word(strands: usize, len: usize) -> BraidWord {
    let s = StrandCount::new(strands).expect("valid strand count");
    let gens = strands as i32 - 1;
    let letters = (0..len as i32)
        .map(|k| {
            let i = (k * 7 + 3) % gens + 1;
            if (k * k) % 3 == 0 {
                -i
            } else {
                i
            }
        })
        .collect();
    BraidWord::new(s, letters).expect("letters in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_valid() {
        for n in [2, 4, 6, 8] {
            assert_eq!(mixed_word(n, 20).len(), 20);
        }
    }
}
