use hopf_cyclic::hopf::{
    cyclic_group_table, dual_hopf, group_algebra, group_algebra_candidates, symmetric_group_s3_table, sweedler_h4,
    sweedler_h4_candidates, Candidates, HopfAlgebra,
};
use hopf_cyclic::{Error, FieldTag, Result};

pub const NAMES: [&str; 6] = ["k", "c2", "c3", "c4", "s3", "h4"];

fn base(name: &str, field: FieldTag) -> Result<Option<(HopfAlgebra, Candidates)>> {
    let table = match name {
        "k" => cyclic_group_table(1),
        "c2" => cyclic_group_table(2),
        "c3" => cyclic_group_table(3),
        "c4" => cyclic_group_table(4),
        "s3" => symmetric_group_s3_table(),
        "h4" => {
            if field.characteristic() == 2 {
                return Err(Error::Input("h4 needs characteristic other than 2".into()));
            }
            let h = sweedler_h4(field);
            let c = sweedler_h4_candidates(&h);
            return Ok(Some((h, c)));
        }
        _ => return Ok(None),
    };
    let h = group_algebra(field, name, &table)?;
    let c = group_algebra_candidates(&h, &table);
    Ok(Some((h, c)))
}

/// A built-in Hopf algebra by name; `dual-NAME` is the dual of a built-in.
pub fn lookup(name: &str, field: FieldTag) -> Result<Option<(HopfAlgebra, Candidates)>> {
    if let Some(inner) = name.strip_prefix("dual-") {
        return match base(inner, field)? {
            Some((h, c)) => {
                let d = dual_hopf(&h)?;
                let dc = c.for_dual(&d)?;
                Ok(Some((d, dc)))
            }
            None => Ok(None),
        };
    }
    base(name, field)
}

pub fn all_names() -> Vec<String> {
    let mut v: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
    v.extend(NAMES.iter().map(|s| format!("dual-{s}")));
    v
}
