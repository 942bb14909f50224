use amoeba_core::instances::{nisse_matrix, trunc_sum_oracle, vandermonde};
use amoeba_core::matroid::{ensure_loopless, make_linear_oracle};
use amoeba_core::{GRMatrix, RankOracle, SubsetMask};

use crate::args::{InstanceArgs, MatrixFormat};
use crate::exit::CliError;

pub struct Instance {
    pub oracle: RankOracle,
    /// Present when the matroid comes from an explicit matrix.
    pub matrix: Option<GRMatrix>,
}

fn numbers<const N: usize>(name: &str, args: &[String]) -> Result<[usize; N], CliError> {
    if args.len() != N {
        return Err(CliError::parse(format!(
            "--gen {name} takes {N} argument(s), got {}",
            args.len()
        )));
    }
    let mut out = [0; N];
    for (slot, a) in out.iter_mut().zip(args) {
        *slot = a.parse().map_err(|_| {
            CliError::parse(format!("--gen {name}: {a:?} is not a non-negative integer"))
        })?;
    }
    Ok(out)
}

fn from_matrix(a: GRMatrix) -> Result<Instance, CliError> {
    let oracle = make_linear_oracle(&a)?;
    Ok(Instance {
        oracle,
        matrix: Some(a),
    })
}

fn generate(spec: &[String], seed: u64) -> Result<Instance, CliError> {
    let (name, rest) = spec
        .split_first()
        .ok_or_else(|| CliError::parse("--gen needs a name"))?;
    match name.as_str() {
        "nisse" => {
            numbers::<0>(name, rest)?;
            from_matrix(nisse_matrix(seed)?)
        }
        "trunc-sum" => {
            let [c, k] = numbers(name, rest)?;
            Ok(Instance {
                oracle: trunc_sum_oracle(c, k)?,
                matrix: None,
            })
        }
        "uniform" => {
            let [d, n] = numbers(name, rest)?;
            from_matrix(vandermonde(d, n)?)
        }
        "identity" => {
            let [n] = numbers(name, rest)?;
            from_matrix(GRMatrix::identity(n)?)
        }
        "ones" => {
            let [n] = numbers(name, rest)?;
            from_matrix(GRMatrix::ones(n)?)
        }
        other => Err(CliError::parse(format!(
            "unknown generator {other:?}; expected nisse, trunc-sum, uniform, identity or ones"
        ))),
    }
}

pub fn load(args: &InstanceArgs) -> Result<Instance, CliError> {
    let instance = match (&args.source.generator, &args.source.matrix) {
        (Some(spec), _) => generate(spec, args.seed)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
            let a = match args.format {
                MatrixFormat::Text => GRMatrix::parse_text(&text)?,
                MatrixFormat::Json => GRMatrix::parse_json(&text)?,
            };
            from_matrix(a)?
        }
        (None, None) => return Err(CliError::parse("expected --gen or --matrix")),
    };
    ensure_loopless(&instance.oracle, instance.oracle.ground())?;
    // reported rank calls start from an empty cache
    Ok(Instance {
        oracle: instance.oracle.fresh(),
        ..instance
    })
}

/// Parses `"1,3,5"` (1-based, whitespace tolerated) into a subset of `ground`.
pub fn parse_subset(list: &str, ground: SubsetMask) -> Result<SubsetMask, CliError> {
    let mut elements = Vec::new();
    for item in list.split(',').map(str::trim) {
        if item.is_empty() {
            if list.trim().is_empty() {
                continue;
            }
            return Err(CliError::parse(format!("malformed subset {list:?}")));
        }
        let e: usize = item
            .parse()
            .map_err(|_| CliError::parse(format!("malformed subset element {item:?}")))?;
        elements.push(e);
    }
    let s = SubsetMask::from_one_based(&elements)
        .filter(|s| s.is_subset(ground))
        .ok_or_else(|| {
            CliError::parse(format!(
                "subset {list:?} is not within 1..={}",
                ground.len()
            ))
        })?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_lists() {
        let g = SubsetMask::full(7);
        assert_eq!(
            parse_subset("1,3,5", g).unwrap(),
            SubsetMask::from_elements([0, 2, 4])
        );
        assert_eq!(
            parse_subset(" 7 , 1", g).unwrap(),
            SubsetMask::from_elements([0, 6])
        );
        assert_eq!(parse_subset("", g).unwrap(), SubsetMask::EMPTY);
        assert_eq!(parse_subset("2,2", g).unwrap(), SubsetMask::singleton(1));
        for bad in ["0", "8", "1,", "a", "-1", "1;2"] {
            assert_eq!(
                parse_subset(bad, g).unwrap_err().code,
                crate::exit::PARSE,
                "{bad}"
            );
        }
    }

    #[test]
    fn generator_arity() {
        assert!(generate(&["uniform".into(), "2".into()], 0).is_err());
        assert!(generate(&["nisse".into(), "2".into()], 0).is_err());
        let inst = generate(&["trunc-sum".into(), "1".into(), "3".into()], 0).unwrap();
        assert!(inst.matrix.is_none());
        assert_eq!(inst.oracle.ground_size(), 6);
    }
}
