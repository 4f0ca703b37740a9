//! The cube model of the Galois group.
//!
//! The 48 elements (sigma, eps) of S4 x {e, rho} act on the eight vertices of
//! a cube: a rotation is determined by how it permutes the four long
//! diagonals, and rho is the antipodal map. Vertex k < 4 is "top k+1" and
//! vertex k >= 4 is "bottom k-3"; the same indices name the generators dz_j
//! and dz̄_j, so a vertex set doubles as a form monomial.
//!
//! A labeling (which diagonal is number j, which end is "top") is found by
//! exhaustive search subject to: the diagonal action is sigma, rho swaps top
//! and bottom of each diagonal, the stabilizer of top 1 is
//! H = {sigma(1) = 1, eps = parity(sigma)}, and the coset representative of
//! each vertex acts on i*D with the sign pattern + - + - on tops and
//! - + - + on bottoms.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

use crate::forms::{sort_sign, Form};
use crate::kernel::linalg::nullspace;
use crate::kernel::split::{perm_index, permutations, DIM};
use crate::kernel::{ContextConstants, GaloisElem, SplitElem};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CubeError {
    #[error("no labeling of the cube satisfies the required invariants")]
    NoConsistentLabeling,
    #[error("element is not fixed by the stabilizer of vertex 1, so it does not lie in F")]
    NotInF,
    #[error("seed is not compatible with the stabilizer of the base sequence")]
    IncompatibleSeed,
    #[error("invalid index sequence: {0}")]
    InvalidSequence(String),
}

/// Index of a group element in `GaloisElem::all()` order.
pub fn elem_index(g: &GaloisElem) -> usize {
    perm_index(&g.sigma) * 2 + usize::from(g.eps)
}

pub fn vertex_name(v: u8) -> String {
    if v < 4 {
        format!("{}", v + 1)
    } else {
        format!("{}b", v - 3)
    }
}

#[derive(Debug, Clone, Copy)]
struct Rotation {
    perm: [usize; 3],
    signs: [i8; 3],
}

impl Rotation {
    fn apply(&self, v: [i8; 3]) -> [i8; 3] {
        [0, 1, 2].map(|i| self.signs[i] * v[self.perm[i]])
    }
}

fn rotations() -> Vec<Rotation> {
    let perms3 = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let psign = [1, -1, -1, 1, 1, -1];
    let mut out = Vec::new();
    for (p, &ps) in perms3.iter().zip(&psign) {
        for bits in 0..8u8 {
            let signs = [0, 1, 2].map(|i| if bits & (1 << i) != 0 { -1i8 } else { 1 });
            if ps * signs.iter().product::<i8>() == 1 {
                out.push(Rotation { perm: *p, signs });
            }
        }
    }
    out
}

fn neg(v: [i8; 3]) -> [i8; 3] {
    v.map(|c| -c)
}

/// The four diagonals, each named by its endpoint with first coordinate +1.
fn diagonals() -> [[i8; 3]; 4] {
    [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]]
}

#[derive(Debug, Clone)]
pub struct CubeModel {
    /// Coordinates in {-1, 1}^3 of each vertex index.
    pub coords: [[i8; 3]; 8],
    /// `action[elem_index(g)][v]` is the image of vertex v.
    action: Vec<[u8; 8]>,
    elems: Vec<GaloisElem>,
    /// `coset_reps[v]` maps vertex 0 (top 1) to v.
    pub coset_reps: [GaloisElem; 8],
    /// Stabilizer of vertex 0.
    pub stabilizer: Vec<GaloisElem>,
}

fn expected_chi(v: u8) -> i8 {
    // + - + - on tops, - + - + on bottoms
    let j = (v % 4) as i32;
    let s = if j % 2 == 0 { 1 } else { -1 };
    if v < 4 {
        s
    } else {
        -s
    }
}

impl CubeModel {
    pub fn build() -> Result<CubeModel, CubeError> {
        let rots = rotations();
        let elems = GaloisElem::all();
        for labels in permutations() {
            for tops in 0..16u8 {
                // vertex coordinates: diagonal d carries label labels[d]
                let mut coords = [[0i8; 3]; 8];
                for (d, dv) in diagonals().iter().enumerate() {
                    let j = labels[d] as usize;
                    let top = if tops & (1 << d) != 0 { *dv } else { neg(*dv) };
                    coords[j] = top;
                    coords[j + 4] = neg(top);
                }
                if let Some(model) = Self::try_labeling(coords, &rots, &elems) {
                    return Ok(model);
                }
            }
        }
        Err(CubeError::NoConsistentLabeling)
    }

    fn try_labeling(coords: [[i8; 3]; 8], rots: &[Rotation], elems: &[GaloisElem]) -> Option<CubeModel> {
        let label_of = |v: [i8; 3]| coords.iter().position(|c| *c == v).unwrap() as u8;
        // rotation realizing each diagonal permutation, in label terms
        let mut by_sigma: BTreeMap<[u8; 4], Rotation> = BTreeMap::new();
        for r in rots {
            let mut sigma = [0u8; 4];
            for (j, s) in sigma.iter_mut().enumerate() {
                *s = label_of(r.apply(coords[j])) % 4;
            }
            by_sigma.insert(sigma, *r);
        }
        if by_sigma.len() != 24 {
            return None;
        }
        let mut action = Vec::with_capacity(48);
        for g in elems {
            let r = by_sigma[&g.sigma];
            let mut img = [0u8; 8];
            for (v, out) in img.iter_mut().enumerate() {
                let w = r.apply(coords[v]);
                *out = label_of(if g.eps { neg(w) } else { w });
            }
            action.push(img);
        }
        let mut reps = [None; 8];
        for (g, img) in elems.iter().zip(&action) {
            let v = img[0] as usize;
            if reps[v].is_none() {
                reps[v] = Some(*g);
            }
        }
        if reps.iter().any(|r| r.is_none()) {
            return None;
        }
        let coset_reps = reps.map(|r| r.unwrap());
        let stabilizer: Vec<GaloisElem> =
            elems.iter().zip(&action).filter(|(_, img)| img[0] == 0).map(|(g, _)| *g).collect();
        let h_ok = stabilizer.len() == 6
            && stabilizer
                .iter()
                .all(|g| g.sigma[0] == 0 && g.eps == (g.sign() < 0));
        if !h_ok {
            return None;
        }
        if (0..8u8).any(|v| coset_reps[v as usize].chi() != expected_chi(v)) {
            return None;
        }
        let model = CubeModel { coords, action, elems: elems.to_vec(), coset_reps, stabilizer };
        // diagonal and antipodal structure
        for g in elems {
            for v in 0..8u8 {
                let w = model.act_vertex(g, v);
                if w % 4 != g.sigma[(v % 4) as usize] {
                    return None;
                }
            }
        }
        if (0..8u8).any(|v| model.act_vertex(&GaloisElem::RHO, v) != (v + 4) % 8) {
            return None;
        }
        Some(model)
    }

    pub fn elems(&self) -> &[GaloisElem] {
        &self.elems
    }

    pub fn act_vertex(&self, g: &GaloisElem, v: u8) -> u8 {
        self.action[elem_index(g)][v as usize]
    }

    pub fn act_seq(&self, g: &GaloisElem, seq: &[u8]) -> Vec<u8> {
        seq.iter().map(|&v| self.act_vertex(g, v)).collect()
    }

    /// The embedding of F = L^H attached to vertex v, applied to `u`.
    pub fn embedding_of(&self, u: &SplitElem, v: u8) -> Result<SplitElem, CubeError> {
        if self.stabilizer.iter().any(|h| &h.apply(u) != u) {
            return Err(CubeError::NotInF);
        }
        Ok(self.coset_reps[v as usize].apply(u))
    }

    /// The action of g on forms: g sends c dz^S to g(c) dz^{g S}.
    pub fn act_form(&self, g: &GaloisElem, f: &Form<SplitElem>) -> Form<SplitElem> {
        let mut out = Form::zero();
        for (&m, c) in f.terms() {
            let seq: Vec<u8> = (0..8u8).filter(|k| m & (1 << k) != 0).map(|k| self.act_vertex(g, k)).collect();
            let (s, mask) = sort_sign(&seq).expect("action is a bijection");
            let v = g.apply(c);
            out.add_term(mask, if s < 0 { -v } else { v });
        }
        out
    }

    /// Whether a form is invariant under all 48 elements, i.e. rational.
    pub fn is_rational_form(&self, f: &Form<SplitElem>) -> bool {
        self.elems.iter().all(|g| &self.act_form(g, f) == f)
    }

    /// The orbit R of an index sequence: all reorderings of all images.
    pub fn orbit_of(&self, seq: &[u8]) -> Result<Orbit, CubeError> {
        let Some((_, base_mask)) = sort_sign(seq) else {
            return Err(CubeError::InvalidSequence("repeated index".into()));
        };
        if seq.is_empty() || seq.iter().any(|&v| v >= 8) {
            return Err(CubeError::InvalidSequence(format!("{seq:?}")));
        }
        let base_sorted: Vec<u8> = (0..8u8).filter(|k| base_mask & (1 << k) != 0).collect();
        let mut sets: Vec<u8> = self
            .elems
            .iter()
            .map(|g| sort_sign(&self.act_seq(g, &base_sorted)).unwrap().1)
            .collect();
        sets.sort_unstable();
        sets.dedup();
        Ok(Orbit { base: seq.to_vec(), base_mask, sets })
    }

    /// Elements of the set stabilizer of the orbit's base set, reduced to a
    /// generating set.
    fn stabilizer_generators(&self, orbit: &Orbit) -> Vec<GaloisElem> {
        let sorted = orbit.base_sorted();
        let stab: Vec<GaloisElem> = self
            .elems
            .iter()
            .filter(|g| sort_sign(&self.act_seq(g, &sorted)).unwrap().1 == orbit.base_mask)
            .copied()
            .collect();
        let mut gens: Vec<GaloisElem> = Vec::new();
        let mut generated = vec![GaloisElem::IDENTITY];
        for g in stab {
            if generated.contains(&g) {
                continue;
            }
            gens.push(g);
            // close under composition
            let mut frontier = generated.clone();
            while let Some(a) = frontier.pop() {
                for b in &gens {
                    let c = a.compose(b);
                    if !generated.contains(&c) {
                        generated.push(c);
                        frontier.push(c);
                    }
                }
            }
        }
        gens
    }

    /// A Q-basis of the equivariant antisymmetric maps R -> L, returned as
    /// the rational forms they define. The dimension is the rank of H_R.
    pub fn equivariant_basis(&self, orbit: &Orbit, ctx: &ContextConstants) -> Vec<Form<SplitElem>> {
        let sorted = orbit.base_sorted();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for g in self.stabilizer_generators(orbit) {
            let (s, _) = sort_sign(&self.act_seq(&g, &sorted)).unwrap();
            // columns of the matrix of g on L, minus s times the identity
            let cols: Vec<Vec<BigRational>> =
                (0..DIM).map(|k| g.apply(&ctx.field.basis(k)).coeffs()).collect();
            for r in 0..DIM {
                let mut row: Vec<BigRational> = (0..DIM).map(|k| cols[k][r].clone()).collect();
                row[r] -= BigRational::from_integer(s.into());
                rows.push(row);
            }
        }
        let kernel = if rows.is_empty() {
            (0..DIM)
                .map(|k| {
                    let mut v = vec![BigRational::zero(); DIM];
                    v[k] = BigRational::from_integer(1.into());
                    v
                })
                .collect()
        } else {
            nullspace(&rows, DIM)
        };
        kernel
            .iter()
            .map(|v| {
                let c = ctx.field.from_coeffs(v);
                self.expand_sorted(orbit, &c).expect("kernel vectors are compatible")
            })
            .collect()
    }

    /// The rational form Σ_{S in orbit} chi(S) dz^S determined by the value
    /// `seed` of chi on the base sequence.
    pub fn expand_seed(&self, orbit: &Orbit, seed: &SplitElem) -> Result<Form<SplitElem>, CubeError> {
        let (s, _) = sort_sign(&orbit.base).unwrap();
        let c = if s < 0 { -seed } else { seed.clone() };
        self.expand_sorted(orbit, &c)
    }

    fn expand_sorted(&self, orbit: &Orbit, c: &SplitElem) -> Result<Form<SplitElem>, CubeError> {
        let sorted = orbit.base_sorted();
        let mut vals: BTreeMap<u8, SplitElem> = BTreeMap::new();
        for g in &self.elems {
            let (s, mask) = sort_sign(&self.act_seq(g, &sorted)).unwrap();
            let gc = g.apply(c);
            let v = if s < 0 { -gc } else { gc };
            match vals.get(&mask) {
                Some(prev) if prev != &v => return Err(CubeError::IncompatibleSeed),
                Some(_) => {}
                None => {
                    vals.insert(mask, v);
                }
            }
        }
        Ok(Form::from_terms(vals))
    }

    /// Orbits of vertex sets of the given size, each named by its smallest set.
    pub fn set_orbits(&self, size: u32) -> Vec<Orbit> {
        let mut seen: Vec<u8> = Vec::new();
        let mut out = Vec::new();
        for mask in 0..=255u8 {
            if mask.count_ones() != size || seen.contains(&mask) {
                continue;
            }
            let seq: Vec<u8> = (0..8u8).filter(|k| mask & (1 << k) != 0).collect();
            let orbit = self.orbit_of(&seq).expect("valid sequence");
            seen.extend(&orbit.sets);
            out.push(orbit);
        }
        out
    }
}

/// An orbit R of index sequences of length r, closed under reordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub base: Vec<u8>,
    pub base_mask: u8,
    /// The G-orbit of the underlying set, as sorted masks.
    pub sets: Vec<u8>,
}

impl Orbit {
    pub fn len_r(&self) -> usize {
        self.base.len()
    }

    pub fn base_sorted(&self) -> Vec<u8> {
        (0..8u8).filter(|k| self.base_mask & (1 << k) != 0).collect()
    }

    /// |R| = (number of sets) * r!.
    pub fn size(&self) -> usize {
        self.sets.len() * (1..=self.len_r()).product::<usize>()
    }

    /// |R| / r!, the predicted rank of H_R.
    pub fn predicted_rank(&self) -> usize {
        self.sets.len()
    }

    /// Every sequence has as many tops as bottoms.
    pub fn is_balanced(&self) -> bool {
        self.sets.iter().all(|m| (m & 0x0f).count_ones() == (m >> 4).count_ones())
    }

    pub fn name(&self) -> String {
        self.base.iter().map(|&v| vertex_name(v)).collect::<Vec<_>>().join(",")
    }
}

/// One row of the exhaustive rank check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LemmaRow {
    pub r: usize,
    pub base: String,
    pub orbit_size: usize,
    pub predicted: usize,
    pub computed: usize,
    pub balanced: bool,
}

/// Compare the computed rank of H_R with |R|/r! for every orbit of length 1..=max_len.
pub fn lemma_check(model: &CubeModel, ctx: &ContextConstants, max_len: u32) -> Vec<LemmaRow> {
    let mut out = Vec::new();
    for r in 1..=max_len {
        for orbit in model.set_orbits(r) {
            let computed = model.equivariant_basis(&orbit, ctx).len();
            out.push(LemmaRow {
                r: r as usize,
                base: orbit.name(),
                orbit_size: orbit.size(),
                predicted: orbit.predicted_rank(),
                computed,
                balanced: orbit.is_balanced(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{constants, Quartic};

    fn formula(g: &GaloisElem, v: u8) -> u8 {
        let j = (v % 4) as i32;
        let t: i32 = if v < 4 { 1 } else { -1 };
        let sj = g.sigma[j as usize] as i32;
        let t2 = i32::from(g.chi()) * if (sj + j) % 2 == 0 { 1 } else { -1 } * t;
        (sj + if t2 > 0 { 0 } else { 4 }) as u8
    }

    #[test]
    fn model_matches_closed_form_action() {
        let m = CubeModel::build().unwrap();
        for g in m.elems() {
            for v in 0..8 {
                assert_eq!(m.act_vertex(g, v), formula(g, v));
            }
        }
        for g in m.elems() {
            for h in m.elems() {
                for v in 0..8 {
                    assert_eq!(m.act_vertex(&g.compose(h), v), m.act_vertex(g, m.act_vertex(h, v)));
                }
            }
        }
    }

    #[test]
    fn sign_pattern_on_i_dd() {
        let ctx = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let m = CubeModel::build().unwrap();
        let pattern = [1, -1, 1, -1, -1, 1, -1, 1];
        for v in 0..8u8 {
            let img = m.coset_reps[v as usize].apply(&ctx.i_dd);
            let want = if pattern[v as usize] > 0 { ctx.i_dd.clone() } else { -&ctx.i_dd };
            assert_eq!(img, want);
        }
        assert!(matches!(m.embedding_of(&ctx.x[1], 0), Err(CubeError::NotInF)));
        assert_eq!(m.embedding_of(&ctx.x[0], 2).unwrap(), ctx.x[2]);
    }

    #[test]
    fn orbit_ranks() {
        let ctx = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let m = CubeModel::build().unwrap();
        let diag = m.orbit_of(&[0, 4]).unwrap();
        assert_eq!(diag.sets.len(), 4);
        assert!(diag.is_balanced());
        assert_eq!(m.equivariant_basis(&diag, &ctx).len(), 4);
        let special = m.orbit_of(&[0, 2, 5, 7]).unwrap();
        assert_eq!(special.sets.len(), 2);
        let basis = m.equivariant_basis(&special, &ctx);
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(|f| m.is_rational_form(f)));
        assert!(matches!(m.orbit_of(&[0, 0]), Err(CubeError::InvalidSequence(_))));
    }

    #[test]
    fn seed_expansion() {
        let ctx = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let m = CubeModel::build().unwrap();
        let orbit = m.orbit_of(&[0, 2]).unwrap();
        let seed = &ctx.h3 * &ctx.diff(1, 3);
        let a1 = m.expand_seed(&orbit, &seed).unwrap();
        assert_eq!(a1.len(), 12);
        assert!(m.is_rational_form(&a1));
        assert_eq!(a1.coeff(0b0101), Some(&seed));
        assert!(matches!(m.expand_seed(&orbit, &ctx.x[0]), Err(CubeError::IncompatibleSeed)));
    }

    #[test]
    fn rank_formula_holds_for_every_orbit_up_to_length_four() {
        let ctx = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let m = CubeModel::build().unwrap();
        let rows = lemma_check(&m, &ctx, 4);
        assert_eq!(rows.iter().map(|r| r.r).max(), Some(4));
        for row in &rows {
            assert_eq!(row.computed, row.predicted, "{row:?}");
        }
    }
}
