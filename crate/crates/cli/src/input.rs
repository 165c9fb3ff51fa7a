use std::path::Path;
use std::process::ExitCode;

use vknots::catalog::{builtin, parse_catalog, CatalogEntry};
use vknots::Diagram;

/// A failure with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    pub fn report(&self) -> ExitCode {
        eprintln!("error: {}", self.message);
        ExitCode::from(self.code)
    }
}

impl From<vknots::Error> for Failure {
    fn from(e: vknots::Error) -> Failure {
        let code = if e.is_input_error() { 2 } else { 3 };
        let message = if code == 3 {
            format!("precondition violated: {e}")
        } else {
            e.to_string()
        };
        Failure { code, message }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

pub struct Context {
    pub json: bool,
    catalog: Vec<CatalogEntry>,
}

impl Context {
    pub fn new(extra: Option<&Path>, json: bool) -> Outcome<Context> {
        let mut catalog = Vec::new();
        if let Some(path) = extra {
            catalog.extend(read_catalog(&path.to_string_lossy())?);
        }
        catalog.extend(builtin());
        Ok(Context { json, catalog })
    }

    /// A catalog name, a file holding a code, or a code.
    pub fn diagram(&self, input: &str) -> Outcome<Diagram> {
        if let Some(e) = self.catalog.iter().find(|e| e.name.eq_ignore_ascii_case(input.trim())) {
            return Ok(e.diagram.clone());
        }
        let path = Path::new(input);
        if path.is_file() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{input}: {e}")))?;
            return Ok(text.trim().parse()?);
        }
        Ok(input.parse()?)
    }
}

pub fn read_catalog(file: &str) -> Outcome<Vec<CatalogEntry>> {
    let text = if file == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(file)
    }
    .map_err(|e| Failure::input(format!("{file}: {e}")))?;
    Ok(parse_catalog(&text)?)
}
