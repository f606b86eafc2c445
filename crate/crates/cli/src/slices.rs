//! Parsing of subgroups and slices given on the command line.
//!
//! A generator list is comma separated element names `gK`, where `K` is the
//! element's index in the group; `1`, `e` or nothing stands for the trivial
//! subgroup. This matches the class labels printed by the tool.

use slice_burnside::group::{FiniteGroup, Subgroup};

use crate::Failure;

pub fn parse_generators(g: &FiniteGroup, text: &str) -> Result<Subgroup, Failure> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut gens = Vec::new();
    for (i, tok) in text.split(',').enumerate() {
        if tok.is_empty() || tok == "1" || tok == "e" {
            continue;
        }
        let idx = tok
            .strip_prefix('g')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Failure::Usage(format!("generator {} ({tok:?}): expected gK with K an element index", i + 1)))?;
        if idx >= g.order() {
            return Err(Failure::Usage(format!(
                "generator {tok} is out of range for {} of order {}",
                g.label(),
                g.order()
            )));
        }
        gens.push(idx);
    }
    Ok(g.generate(&gens))
}

/// `T=g1,g2;S=g1` (either order of the two parts).
pub fn parse_slice(g: &FiniteGroup, text: &str) -> Result<(Subgroup, Subgroup), Failure> {
    let mut t = None;
    let mut s = None;
    for part in text.split(';') {
        let part = part.trim();
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("slice part {part:?}: expected T=... or S=...")))?;
        match key.trim() {
            "T" | "t" => t = Some(parse_generators(g, val)?),
            "S" | "s" => s = Some(parse_generators(g, val)?),
            k => return Err(Failure::Usage(format!("slice part {k:?}: expected T or S"))),
        }
    }
    let (t, s) = match (t, s) {
        (Some(t), Some(s)) => (t, s),
        _ => return Err(Failure::Usage(format!("slice {text:?}: both T=... and S=... are required"))),
    };
    if !s.is_subgroup_of(&t) {
        return Err(Failure::Usage(format!("slice {text:?}: S is not contained in T")));
    }
    Ok((t, s))
}

/// `<spec>:[T gens],[S gens]`; returns the spec and the two generator lists.
pub fn split_seed(text: &str) -> Result<(&str, &str, &str), Failure> {
    let bad = || Failure::Usage(format!("seed {text:?}: expected <spec>:[gens of T],[gens of S]"));
    let cut = text.rfind(":[").ok_or_else(bad)?;
    let spec = &text[..cut];
    let rest = &text[cut + 1..];
    let (t, s) = rest.split_once("],[").ok_or_else(bad)?;
    let t = t.strip_prefix('[').ok_or_else(bad)?;
    let s = s.strip_suffix(']').ok_or_else(bad)?;
    Ok((spec, t, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use slice_burnside::group::DEFAULT_ORDER_CAP;

    #[test]
    fn generator_lists() {
        let g = FiniteGroup::cyclic(4, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(parse_generators(&g, "g1").unwrap().order(), 4);
        assert_eq!(parse_generators(&g, "1").unwrap().order(), 1);
        assert_eq!(parse_generators(&g, "").unwrap().order(), 1);
        assert!(parse_generators(&g, "g9").is_err());
        assert!(parse_generators(&g, "x").is_err());
        let (t, s) = parse_slice(&g, "T=g1;S=g2").unwrap();
        assert_eq!((t.order(), s.order()), (4, 2));
        assert!(parse_slice(&g, "T=g2;S=g1").is_err());
        assert!(parse_slice(&g, "T=g2").is_err());
    }

    #[test]
    fn seeds() {
        assert_eq!(split_seed("elab:3^3:[g1,g2,g3],[g1,g2]").unwrap(), ("elab:3^3", "g1,g2,g3", "g1,g2"));
        assert_eq!(split_seed("cyclic:1:[],[]").unwrap(), ("cyclic:1", "", ""));
        assert!(split_seed("elab:3^3").is_err());
    }
}
