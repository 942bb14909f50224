use amoeba_core::Error;

pub const INTERNAL: u8 = 1;
pub const PARSE: u8 = 2;
pub const DEGENERATE: u8 = 3;
pub const VERIFICATION: u8 = 4;
pub const SIZE_LIMIT: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: PARSE,
            message: message.into(),
        }
    }

    pub fn size_limit(message: impl Into<String>) -> Self {
        CliError {
            code: SIZE_LIMIT,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: INTERNAL,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidParams(_)
            | Error::NotInGround { .. }
            | Error::RankDeficientInput
            | Error::RankZero
            | Error::EmptyMember
            | Error::SupportMismatch
            | Error::NotSubsetOfB => PARSE,
            Error::ZeroColumn { .. } | Error::Loop { .. } => DEGENERATE,
            Error::GroundTooLarge { .. } | Error::BTooLarge { .. } => SIZE_LIMIT,
            Error::CertificationFailed(_) | Error::LatticeViolation(_) => VERIFICATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}
