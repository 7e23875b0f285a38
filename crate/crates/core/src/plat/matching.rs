use crate::plat::LaurentPoly;

/// A noncrossing perfect matching of `2n` points on a line, all arcs lying
/// above the line. These are the Temperley–Lieb basis states.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    partner: Vec<u8>,
}

impl PlanarMatching {
    /// The standard cap system `(1,2), (3,4), …`.
    pub fn standard_caps(points: usize) -> Self {
        debug_assert!(points.is_multiple_of(2));
        PlanarMatching {
            partner: (0..points as u8).map(|i| i ^ 1).collect(),
        }
    }

    pub fn from_partners(partner: Vec<u8>) -> Option<Self> {
        let m = PlanarMatching { partner };
        m.is_valid().then_some(m)
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    fn is_valid(&self) -> bool {
        let n = self.partner.len();
        let perfect = (0..n).all(|i| {
            let j = self.partner(i);
            j < n && j != i && self.partner(j) == i
        });
        perfect
            && (0..n).all(|i| {
                let j = self.partner(i);
                // every point strictly inside the arc (i, j) pairs inside it
                i > j || (i + 1..j).all(|k| (i + 1..j).contains(&self.partner(k)))
            })
    }

    /// Applies the generator `e_pos`: the points `pos`, `pos + 1` are joined
    /// from above and a fresh cup joins them below. Returns whether a closed
    /// loop was created.
    pub fn cap_cup(&self, pos: usize) -> (bool, PlanarMatching) {
        let (a, b) = (self.partner(pos), self.partner(pos + 1));
        if a == pos + 1 {
            return (true, self.clone());
        }
        let mut partner = self.partner.clone();
        partner[a] = b as u8;
        partner[b] = a as u8;
        partner[pos] = pos as u8 + 1;
        partner[pos + 1] = pos as u8;
        (false, PlanarMatching { partner })
    }

    /// Number of closed loops when `self` is glued to `other` reflected below the line.
    pub fn loops_against(&self, other: &PlanarMatching) -> usize {
        let n = self.points();
        let mut seen = vec![false; n];
        let mut loops = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut i = start;
            loop {
                seen[i] = true;
                let j = self.partner(i);
                seen[j] = true;
                i = other.partner(j);
                if i == start {
                    break;
                }
            }
        }
        loops
    }
}

/// All noncrossing perfect matchings of `points` points; there are Catalan(points/2).
pub fn all_matchings(points: usize) -> Vec<PlanarMatching> {
    fn arcs(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        // `lo` pairs with some `j`; both sides of the arc are matched independently.
        for j in (lo + 1..hi).step_by(2) {
            for inner in arcs(lo + 1, j) {
                for outer in arcs(j + 1, hi) {
                    let mut v = vec![(lo, j)];
                    v.extend(inner.iter().chain(&outer));
                    out.push(v);
                }
            }
        }
        out
    }
    let mut out: Vec<PlanarMatching> = arcs(0, points)
        .into_iter()
        .map(|pairs| {
            let mut partner = vec![0u8; points];
            for (a, b) in pairs {
                partner[a] = b as u8;
                partner[b] = a as u8;
            }
            PlanarMatching { partner }
        })
        .collect();
    out.sort();
    out
}

/// A vector in the Temperley–Lieb module with Laurent-polynomial coefficients.
pub(crate) type TlState = std::collections::BTreeMap<PlanarMatching, LaurentPoly>;
