//! Random instances, seeded campaigns and JSON reports on top of
//! `fpcoh-core`.

pub mod campaign;
pub mod instance;
pub mod report;

pub use campaign::{
    run_campaign, run_campaign_with, run_trial, run_trial_with, CampaignConfig, CampaignReport, Summary, TrialRecord,
};
pub use instance::random_instance;
pub use report::CheckJson;
