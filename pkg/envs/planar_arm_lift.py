#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/5
# @Author  : .*?
# @File    : planar_arm_lift
# @Software: PyCharm
"""Three-link planar arm that reaches an object, grasps it and lifts it.

Observation (12): joint angles (3), joint velocities (3), end-effector xy (2),
object x, y, height (3), grasped flag (1).
Action (4): joint torques (3) and a gripper command, all in [-1, 1].

Grasping is a threshold event: the end effector within GRASP_RADIUS of the object while the
gripper command exceeds GRIP_THRESHOLD. Once grasped the object rides with the end effector
and rises at LIFT_SPEED times the positive gripper command; it never drops.
Reward: -(end-effector to object distance) while ungrasped, 10 x height gain once grasped,
+50 and done when the height exceeds SUCCESS_HEIGHT.
"""
from typing import Tuple

import numpy as np

from domain.entity.env_spec import EnvSpec
from domain.enums.env_name import EnvName
from envs.base_env import BaseEnv
from envs.env_factory import EnvFactory
from envs.kinematics import LINK_LENGTHS, forward_kinematics

DT = 0.05
TORQUE_SCALE = 4.0
JOINT_DAMPING = 1.0
MAX_JOINT_SPEED = 2.0
OBJECT_RADIUS_RANGE = (0.4, 0.8)
GRASP_RADIUS = 0.05
GRIP_THRESHOLD = 0.5
LIFT_SPEED = 0.4
LIFT_REWARD_SCALE = 10.0
SUCCESS_HEIGHT = 0.3
SUCCESS_BONUS = 50.0


@EnvFactory.register(EnvName.ARMLIFT)
class PlanarArmLift(BaseEnv):
    spec = EnvSpec(name=EnvName.ARMLIFT, state_dim=12, action_dim=4, action_bound=1.0, episode_horizon=300)

    def __init__(self):
        super().__init__()
        self.angles = np.zeros(len(LINK_LENGTHS))
        self.joint_velocities = np.zeros(len(LINK_LENGTHS))
        self.object_xy = np.zeros(2)
        self.object_height = 0.0
        self.grasped = False

    def _reset_state(self, rng: np.random.Generator) -> None:
        self.angles = np.zeros(len(LINK_LENGTHS))
        self.joint_velocities = np.zeros(len(LINK_LENGTHS))
        radius = rng.uniform(*OBJECT_RADIUS_RANGE)
        angle = rng.uniform(-np.pi, np.pi)
        self.object_xy = radius * np.array([np.cos(angle), np.sin(angle)])
        self.object_height = 0.0
        self.grasped = False

    @property
    def end_effector(self) -> np.ndarray:
        return np.array(forward_kinematics(self.angles))

    def _advance(self, action: np.ndarray) -> Tuple[float, bool]:
        torques, gripper = action[:-1], float(action[-1])
        accel = TORQUE_SCALE * torques - JOINT_DAMPING * self.joint_velocities
        self.joint_velocities = np.clip(self.joint_velocities + DT * accel, -MAX_JOINT_SPEED, MAX_JOINT_SPEED)
        # wrap to [-pi, pi) so observations stay bounded
        self.angles = np.mod(self.angles + DT * self.joint_velocities + np.pi, 2 * np.pi) - np.pi
        end_effector = self.end_effector

        if not self.grasped:
            distance = float(np.linalg.norm(end_effector - self.object_xy))
            if distance <= GRASP_RADIUS and gripper > GRIP_THRESHOLD:
                self.grasped = True
            else:
                return -distance, False

        self.object_xy = end_effector
        gain = DT * LIFT_SPEED * max(0.0, gripper)
        self.object_height += gain
        reward = LIFT_REWARD_SCALE * gain
        if self.object_height > SUCCESS_HEIGHT:
            return reward + SUCCESS_BONUS, True
        return reward, False

    def _observe(self) -> np.ndarray:
        return np.concatenate([
            self.angles,
            self.joint_velocities,
            self.end_effector,
            self.object_xy,
            [self.object_height, float(self.grasped)],
        ])
