#include "monomap/geometry.hpp"

#include <cmath>
#include <sstream>

namespace monomap {

namespace {

constexpr double kRotationTolerance = 1e-9;

}  // namespace

void CameraIntrinsics::validate() const {
    std::ostringstream oss;
    if (!(fx > 0.0) || !(fy > 0.0)) {
        oss << "focal lengths must be positive, got fx=" << fx << " fy=" << fy;
        throw InvalidArgument(oss.str());
    }
    if (width < 1 || height < 1) {
        oss << "sensor size must be at least 1x1, got " << width << "x" << height;
        throw InvalidArgument(oss.str());
    }
    if (!(cx > 0.0 && cx < width) || !(cy > 0.0 && cy < height)) {
        oss << "principal point (" << cx << ", " << cy << ") outside sensor " << width << "x"
            << height;
        throw InvalidArgument(oss.str());
    }
}

CameraPose::CameraPose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation)
    : rotation_(rotation), translation_(translation) {
    const double ortho_err =
        (rotation.transpose() * rotation - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    const double det_err = std::abs(rotation.determinant() - 1.0);
    if (!(ortho_err <= kRotationTolerance) || !(det_err <= kRotationTolerance)) {
        std::ostringstream oss;
        oss << "rotation is not a proper orthonormal matrix (orthogonality error " << ortho_err
            << ", determinant error " << det_err << ")";
        throw InvalidArgument(oss.str());
    }
    if (!translation.allFinite()) {
        throw InvalidArgument("translation must be finite");
    }
}

CameraPose CameraPose::from_quaternion(double w, double x, double y, double z,
                                       const Eigen::Vector3d& translation) {
    const double norm = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(std::abs(norm - 1.0) <= 1e-6)) {
        std::ostringstream oss;
        oss << "quaternion norm " << norm << " deviates from 1 by more than 1e-6";
        throw InvalidArgument(oss.str());
    }
    w /= norm;
    x /= norm;
    y /= norm;
    z /= norm;
    Eigen::Matrix3d r;
    r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),  //
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),   //
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return CameraPose(r, translation);
}

Eigen::Vector4d CameraPose::quaternion_wxyz() const {
    const Eigen::Matrix3d& r = rotation_;
    const double trace = r.trace();
    Eigen::Vector4d q;  // (w, x, y, z)
    if (trace > 0.0) {
        double s = std::sqrt(trace + 1.0) * 2.0;
        q << 0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s;
    } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
        double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
        q << (r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s;
    } else if (r(1, 1) > r(2, 2)) {
        double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
        q << (r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s;
    } else {
        double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
        q << (r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s;
    }
    if (q(0) < 0.0) q = -q;
    return q.normalized();
}

CameraPoint world_to_camera(const CameraPose& pose, const WorldPoint& p) {
    return pose.rotation() * p + pose.translation();
}

WorldPoint camera_to_world(const CameraPose& pose, const CameraPoint& p) {
    return pose.rotation().transpose() * (p - pose.translation());
}

PixelCoord project(const CameraIntrinsics& k, const CameraPoint& p) {
    if (!(p.z() > kMinProjectionDepth)) {
        std::ostringstream oss;
        oss << "point behind camera: z=" << p.z();
        throw InvalidArgument(oss.str());
    }
    return {k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy};
}

CameraPoint backproject(const CameraIntrinsics& k, const PixelCoord& px, double depth) {
    if (!(depth > 0.0)) {
        std::ostringstream oss;
        oss << "non-positive depth: " << depth;
        throw InvalidArgument(oss.str());
    }
    return {depth * (px.u - k.cx) / k.fx, depth * (px.v - k.cy) / k.fy, depth};
}

double tie_point_depth(const CameraPose& pose, const WorldPoint& p) {
    return pose.rotation().row(2).dot(p) + pose.translation().z();
}

}  // namespace monomap
