#pragma once

#include <stdexcept>
#include <string>

namespace nhs {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// linalg
class SingularMatrix : public Error { using Error::Error; };
class IndexOutOfRange : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };

// model
class NotHermitian : public Error {
public:
    NotHermitian(std::string block, double defect);
    const std::string& block() const noexcept { return block_; }
    double defect() const noexcept { return defect_; }

private:
    std::string block_;
    double defect_;
};
class InvalidLead : public Error { using Error::Error; };
class NotReal : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

// scattering
class MomentumOutOfBand : public Error { using Error::Error; };
class SingularDelta : public Error { using Error::Error; };
class PoleAtK : public Error { using Error::Error; };
class SingularSystem : public Error { using Error::Error; };
class InvalidSite : public Error { using Error::Error; };
class InvalidRange : public Error { using Error::Error; };

// pt_builder
class JointOutsideAxis : public Error { using Error::Error; };

// four-site model
class NotInConservingClass : public Error { using Error::Error; };
class ZetaPole : public Error { using Error::Error; };
class DegenerateDenominator : public Error { using Error::Error; };

// wavepacket
class InvalidConfig : public Error { using Error::Error; };
class StepTooLarge : public Error { using Error::Error; };

}  // namespace nhs
