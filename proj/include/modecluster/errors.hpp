#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace modecluster {

// Base class for all library errors. exit_code() maps onto the CLI's
// process exit codes: 2 invalid input, 3 numerical failure, 4 I/O.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 2; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

class DegenerateColumn : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& msg, Eigen::VectorXd last)
        : Error(msg), last_iterate(std::move(last)) {}
    int exit_code() const noexcept override { return 3; }

    Eigen::VectorXd last_iterate;
};

class AllClustersInsignificant : public Error {
public:
    using Error::Error;
};

class EmptyCluster : public Error {
public:
    using Error::Error;
};

// Wraps an error thrown inside a pipeline stage, keeping the inner
// error's exit code.
class PipelineError : public Error {
public:
    PipelineError(const std::string& stage, const std::string& what, int code)
        : Error("stage " + stage + ": " + what), stage_(stage), code_(code) {}
    int exit_code() const noexcept override { return code_; }
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
    int code_;
};

}  // namespace modecluster
