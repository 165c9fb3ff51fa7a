//! Named diagram collections.
//!
//! One entry per line: `name<TAB>code[<TAB>tags]`, tags comma-separated.
//! Blank lines and lines starting with `#` are skipped.

use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub diagram: Diagram,
    pub tags: Vec<String>,
}

const BUILTIN: &str = include_str!("../data/fixtures.tsv");

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(n, line)| {
            let at = |e: Error| Error::Invalid(format!("catalog line {}: {e}", n + 1));
            let mut fields = line.split('\t');
            let name = fields.next().unwrap_or_default().trim();
            let code = fields
                .next()
                .ok_or_else(|| at(Error::Invalid("expected name<TAB>code".into())))?;
            if name.is_empty() {
                return Err(at(Error::Invalid("empty name".into())));
            }
            let tags = fields
                .next()
                .map(|t| {
                    t.split(',')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .map(str::to_string)
                        .collect()
                })
                .unwrap_or_default();
            if fields.next().is_some() {
                return Err(at(Error::Invalid("too many fields".into())));
            }
            Ok(CatalogEntry {
                name: name.to_string(),
                diagram: code.parse().map_err(at)?,
                tags,
            })
        })
        .collect()
}

/// The diagrams shipped with the crate.
pub fn builtin() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN).expect("built-in catalog parses")
}

/// A shipped diagram by name, case-insensitive.
pub fn fixture(name: &str) -> Option<Diagram> {
    builtin()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(|e| e.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let all = builtin();
        assert!(all.iter().any(|e| e.name == "HOPF"));
        assert_eq!(fixture("vtref").unwrap().to_string(), "O1+O2+U1+U2+");
        let vk3 = all.iter().find(|e| e.name == "VK3").unwrap();
        assert!(vk3.tags.contains(&"q=3".to_string()));
        assert_eq!(vk3.diagram.crossing_count(), 20);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_catalog("# c\nA\t0\nB\tO1+\n").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        assert!(parse_catalog("A 0").is_err());
        let ok = parse_catalog("A\tO1-;U1-\tlink, x\n\n").unwrap();
        assert_eq!(ok[0].tags, vec!["link", "x"]);
    }
}
