#pragma once

#include <Eigen/Core>

#include "monomap/errors.hpp"

namespace monomap {

// Coordinate conventions used throughout:
//  - world frame: photogrammetric, meters, z up;
//  - camera frame: meters, z along the optical axis, points with z > 0 are
//    in front of the camera;
//  - pixel frame: continuous, origin at the center of the top-left pixel,
//    u along columns, v along rows.
using WorldPoint = Eigen::Vector3d;
using CameraPoint = Eigen::Vector3d;

struct PixelCoord {
    double u = 0.0;
    double v = 0.0;
};

// Points closer than this to the principal plane are rejected by project().
inline constexpr double kMinProjectionDepth = 1e-6;  // meters

struct CameraIntrinsics {
    double fx = 0.0;  // focal lengths, pixels
    double fy = 0.0;
    double cx = 0.0;  // principal point, pixels
    double cy = 0.0;
    int width = 0;  // sensor size, pixels
    int height = 0;

    // Enforces fx,fy > 0, 0 < cx < width, 0 < cy < height, width,height >= 1.
    void validate() const;

    // In-bounds means inside [0, width-1] x [0, height-1], pixel centers.
    bool in_bounds(const PixelCoord& px) const {
        return px.u >= 0.0 && px.u <= width - 1.0 && px.v >= 0.0 && px.v <= height - 1.0;
    }
};

// Rigid world-to-camera transform: x_cam = R * x_world + t.
// The rotation is validated at construction; poses are immutable values.
class CameraPose {
  public:
    CameraPose(const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

    // Unit quaternion (w, x, y, z) in the same world-to-camera convention.
    // Quaternions further than 1e-6 from unit norm are rejected.
    static CameraPose from_quaternion(double w, double x, double y, double z,
                                      const Eigen::Vector3d& translation);

    const Eigen::Matrix3d& rotation() const { return rotation_; }
    const Eigen::Vector3d& translation() const { return translation_; }

    // Camera center in world coordinates (-R^T t).
    Eigen::Vector3d center() const { return -(rotation_.transpose() * translation_); }

    // Viewing direction (camera +z axis) expressed in world coordinates.
    Eigen::Vector3d optical_axis() const { return rotation_.row(2).transpose(); }

    // Quaternion (w, x, y, z) equivalent of rotation(), w >= 0.
    Eigen::Vector4d quaternion_wxyz() const;

  private:
    Eigen::Matrix3d rotation_;
    Eigen::Vector3d translation_;
};

CameraPoint world_to_camera(const CameraPose& pose, const WorldPoint& p);

// Exact inverse of world_to_camera: R^T (p - t).
WorldPoint camera_to_world(const CameraPose& pose, const CameraPoint& p);

// Pinhole projection. Throws InvalidArgument when p.z <= kMinProjectionDepth;
// the result may be out of bounds, callers check with in_bounds().
PixelCoord project(const CameraIntrinsics& k, const CameraPoint& p);

// Inverse of project at a given depth. Throws InvalidArgument when depth <= 0.
CameraPoint backproject(const CameraIntrinsics& k, const PixelCoord& px, double depth);

// Camera-frame z of a world point; the sign is for the caller to check.
double tie_point_depth(const CameraPose& pose, const WorldPoint& p);

}  // namespace monomap
