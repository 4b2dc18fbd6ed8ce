//! Tone systems built from pitch positions.

use group_action::{AnnotationGroup, GroupElem};
use partialcat::ToneSystem;

use crate::actions::bound;
use crate::error::GenError;
use crate::pitch::DIATONIC_STEPS;

fn cyclic(n: usize) -> AnnotationGroup {
    AnnotationGroup::Abelian {
        free_rank: 0,
        torsion: vec![n as i64],
    }
}

fn positions(g: &AnnotationGroup, tiles: &[(&str, &[usize])]) -> Result<ToneSystem, GenError> {
    let mut names = Vec::new();
    let mut pos = Vec::new();
    for (tag, ps) in tiles {
        for &p in *ps {
            names.push(format!("{tag}{p}"));
            pos.push(g.normalize(GroupElem::Vector(vec![p as i64])));
        }
    }
    Ok(ToneSystem::from_positions(names, g.clone(), &pos)?)
}

/// Pitch classes of the n-tone temperament.
pub fn tet_tones(n: usize) -> Result<ToneSystem, GenError> {
    bound("n", n, 1, 64)?;
    Ok(ToneSystem::from_group(cyclic(n))?)
}

/// Lower tetrachord `0 2 4 5` and upper tetrachord `5 7 9 11`, glued at the
/// shared tone 5: eight tones, two of which sound the same.
pub const LOWER_TILE: [usize; 4] = [0, 2, 4, 5];
pub const UPPER_TILE: [usize; 4] = [5, 7, 9, 11];

pub fn glued_tetrachords() -> Result<ToneSystem, GenError> {
    positions(&cyclic(12), &[("lo", &LOWER_TILE), ("hi", &UPPER_TILE)])
}

/// The major scale inside the twelve pitch classes.
pub fn diatonic_tones() -> Result<ToneSystem, GenError> {
    positions(&cyclic(12), &[("d", &DIATONIC_STEPS)])
}

/// Residues of the chroma torus with intervals in `Z_12 x Z_third`.
pub fn tonnetz_tones(third: usize) -> Result<ToneSystem, GenError> {
    bound("third", third, 2, 3)?;
    let g = AnnotationGroup::Abelian {
        free_rank: 0,
        torsion: vec![12, third as i64],
    };
    let elems = g.enumerate().expect("torsion groups are finite");
    let names = elems.iter().map(|e| g.render(e)).collect();
    Ok(ToneSystem::from_positions(names, g, &elems)?)
}

/// Every tone system the generators produce.
pub fn all_tone_systems() -> Result<Vec<(String, ToneSystem)>, GenError> {
    let mut out = Vec::new();
    for n in [5, 7, 12] {
        out.push((format!("tet{n}"), tet_tones(n)?));
    }
    out.push(("glued-tetrachords".into(), glued_tetrachords()?));
    out.push(("diatonic".into(), diatonic_tones()?));
    for t in [2, 3] {
        out.push((format!("tonnetz{t}"), tonnetz_tones(t)?));
    }
    Ok(out)
}
