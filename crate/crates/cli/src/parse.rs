//! Parsing of command-line partition syntax and descriptor files.
//!
//! Partitions are comma-separated decreasing positive integers
//! (`"3,2,1,1"`); profile lists are semicolon-separated partitions
//! (`"3,2,1,1;3,2,2"`, empty string for the empty profile).

use ratsign_core::profiles::{Parity, Partition, ReducedProfiles};
use ratsign_core::snumbers::{BaseDescriptor, BaseType, LabelSequence};

pub fn parse_partition(s: &str) -> Result<Vec<u32>, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let parts: Result<Vec<u32>, _> = trimmed
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect();
    let parts = parts.map_err(|e| format!("invalid partition {s:?}: {e}"))?;
    if parts.iter().any(|&p| p == 0) {
        return Err(format!("invalid partition {s:?}: parts must be positive"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(format!(
            "invalid partition {s:?}: parts must be weakly decreasing"
        ));
    }
    Ok(parts)
}

pub fn parse_profiles(lambda: &str, parity: Parity) -> Result<ReducedProfiles, String> {
    let mut partitions = Vec::new();
    if !lambda.trim().is_empty() {
        for piece in lambda.split(';') {
            let parts = parse_partition(piece)?;
            partitions.push(Partition::new(parts).map_err(|e| e.to_string())?);
        }
    }
    Ok(ReducedProfiles::new(partitions, parity))
}

pub fn parse_parity(s: &str) -> Result<Parity, String> {
    match s {
        "odd" => Ok(Parity::Odd),
        "even" => Ok(Parity::Even),
        other => Err(format!("parity must be \"odd\" or \"even\", got {other:?}")),
    }
}

/// Descriptor files are JSON objects:
/// `{"type": "C", "parity": "odd", "sp": 1, "upper_counts": [0, 2],
///   "labels": [{"entries": [4, 1], "before_sp": 1}]}`.
pub fn parse_descriptor(value: &serde_json::Value) -> Result<BaseDescriptor, String> {
    let obj = value
        .as_object()
        .ok_or("descriptor must be a JSON object")?;
    let type_str = obj
        .get("type")
        .and_then(|v| v.as_str())
        .ok_or("missing \"type\"")?;
    let base_type = match type_str {
        "A" => BaseType::A,
        "B" => BaseType::B,
        "C" => BaseType::C,
        other => return Err(format!("unknown base type {other:?}")),
    };
    let parity = parse_parity(
        obj.get("parity")
            .and_then(|v| v.as_str())
            .ok_or("missing \"parity\"")?,
    )?;
    let sp = obj
        .get("sp")
        .and_then(|v| v.as_u64())
        .ok_or("missing \"sp\"")? as usize;
    let upper_counts = obj
        .get("upper_counts")
        .and_then(|v| v.as_array())
        .ok_or("missing \"upper_counts\"")?
        .iter()
        .map(|v| v.as_u64().map(|x| x as u32).ok_or("bad upper count"))
        .collect::<Result<Vec<u32>, _>>()?;
    let mut labels = Vec::new();
    if let Some(entries) = obj.get("labels") {
        for item in entries.as_array().ok_or("\"labels\" must be an array")? {
            let label = item.as_object().ok_or("label must be an object")?;
            let entries = label
                .get("entries")
                .and_then(|v| v.as_array())
                .ok_or("label missing \"entries\"")?
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32).ok_or("bad entry"))
                .collect::<Result<Vec<u32>, _>>()?;
            let before_sp = label
                .get("before_sp")
                .and_then(|v| v.as_u64())
                .ok_or("label missing \"before_sp\"")? as usize;
            labels.push(LabelSequence { entries, before_sp });
        }
    }
    let descriptor = BaseDescriptor {
        base_type,
        parity,
        sp,
        upper_counts,
        labels,
    };
    descriptor.validate().map_err(|e| e.to_string())?;
    Ok(descriptor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("3,2,1,1").unwrap(), vec![3, 2, 1, 1]);
        assert_eq!(parse_partition("").unwrap(), Vec::<u32>::new());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("2,0").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn profile_lists() {
        let p = parse_profiles("3,2,1,1;3,2,2", Parity::Even).unwrap();
        assert_eq!(p.partitions().len(), 2);
        let empty = parse_profiles("", Parity::Odd).unwrap();
        assert!(empty.partitions().is_empty());
    }

    #[test]
    fn descriptors() {
        let v: serde_json::Value = serde_json::from_str(
            r#"{"type":"C","parity":"odd","sp":1,"upper_counts":[0],"labels":[]}"#,
        )
        .unwrap();
        let d = parse_descriptor(&v).unwrap();
        assert_eq!(d.base_type, BaseType::C);
        let bad: serde_json::Value =
            serde_json::from_str(r#"{"type":"A","parity":"odd","sp":1,"upper_counts":[2]}"#)
                .unwrap();
        assert!(parse_descriptor(&bad).is_err());
    }
}
