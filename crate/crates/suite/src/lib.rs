//! Acceptance suite host crate; see `tests/acceptance.rs`.
