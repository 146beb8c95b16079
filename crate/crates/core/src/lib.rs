pub mod enc;
