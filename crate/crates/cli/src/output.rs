use std::fs;
use std::io::{self, Write};

use oddzeta::Error;
use serde::Serialize;

use crate::config::{Command, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn config(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn assertion(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) => 2,
            Error::Gate { .. } => 3,
            Error::Assertion(_) => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema_version: u32,
    command: &'a Command,
    config: &'a RunConfig,
    result: T,
}

pub fn write_json<T: Serialize>(cmd: &Command, config: &RunConfig, result: T) -> Result<(), Failure> {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command: cmd,
        config,
        result,
    };
    let mut text = serde_json::to_string_pretty(&envelope).expect("serializable");
    text.push('\n');
    emit(config, text.as_bytes())
}

pub fn write_csv(config: &RunConfig, header: &[&str], rows: Vec<Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::assertion(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::assertion(e.to_string()))?;
    emit(config, &bytes)
}

fn emit(config: &RunConfig, bytes: &[u8]) -> Result<(), Failure> {
    match &config.out {
        Some(path) => fs::write(path, bytes)?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}
