#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/7
# @Author  : .*?
# @File    : checkpoint_util
# @Software: PyCharm
"""Versioned checkpoints as a single ``.npz`` archive (no pickled objects).

Layout:
    __meta__                 JSON string: format, version, agent step, Td3Config, RunConfig,
                             optimizer scalars, replay metadata, detector scalars
    net/<name>/<k>           k-th parameter array of network <name> (w0, b0, w1, b1, ...)
    opt/<name>/m/<k>         first moments of optimizer <name>
    opt/<name>/v/<k>         second moments
    detector/ids             insertion ids of remembered states, oldest first
    detector/states          remembered states, one row each
Replay contents are not stored, only their size, cursor and capacity.
"""
import json
import zipfile
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np
from loguru import logger

from agent.td3_agent import Td3Agent
from constants.constants import Constants
from exception.exception import (
    CheckpointCorruptException,
    CheckpointException,
    CheckpointVersionException,
    ShapeMismatchException,
)
from novelty.novelty_detector import NoveltyDetector
from setting.run_config import NoveltyConfig, RunConfig, Td3Config
from utils.path_util import PathUtil


def save_checkpoint(
        agent: Td3Agent,
        detector: Optional[NoveltyDetector],
        path: str | Path,
        run_config: Optional[RunConfig] = None,
) -> Path:
    path = Path(path)
    arrays: Dict[str, np.ndarray] = {}
    for name, network in agent.networks().items():
        for k, param in enumerate(network.parameters()):
            arrays[f'net/{name}/{k}'] = param
    optimizers = {}
    for name, (optimizer, _) in agent.optimizers().items():
        optimizers[name] = optimizer.state_dict()
        for k, (m, v) in enumerate(zip(optimizer.first_moment, optimizer.second_moment)):
            arrays[f'opt/{name}/m/{k}'] = m
            arrays[f'opt/{name}/v/{k}'] = v

    detector_meta = None
    if detector is not None:
        state = detector.state_dict()
        arrays['detector/ids'] = state.pop('ids')
        arrays['detector/states'] = state.pop('states')
        detector_meta = state

    meta = {
        'format': Constants.Checkpoint.FORMAT,
        'version': Constants.Checkpoint.VERSION,
        'step': agent.step,
        'td3': agent.config.model_dump(mode='json'),
        'run': run_config.model_dump(mode='json') if run_config is not None else None,
        'optimizers': optimizers,
        'replay': {'size': agent.replay.size, 'cursor': agent.replay.cursor, 'capacity': agent.replay.capacity},
        'detector': detector_meta,
    }
    arrays[Constants.Checkpoint.META_KEY] = np.array(json.dumps(meta, sort_keys=True))

    PathUtil.check_or_make_dir(path.parent)
    try:
        with path.open('wb') as f:
            np.savez(f, **arrays)
    except OSError as e:
        raise CheckpointException(f'Failed to write checkpoint {path}: {e}') from e
    logger.debug(f"Saved checkpoint {path} at step {agent.step}")
    return path


def read_checkpoint(path: str | Path) -> Tuple[Dict[str, Any], Dict[str, np.ndarray]]:
    path = Path(path)
    if not path.is_file():
        raise CheckpointException(f'Checkpoint not found: {path}')
    try:
        data = np.load(path, allow_pickle=False)
        if not isinstance(data, np.lib.npyio.NpzFile):
            raise ValueError('not an npz archive')
        with data:
            arrays = {key: data[key] for key in data.files}
        meta = json.loads(str(arrays.pop(Constants.Checkpoint.META_KEY)))
    except (zipfile.BadZipFile, ValueError, OSError, EOFError, KeyError) as e:
        raise CheckpointCorruptException(f'Checkpoint {path} is unreadable: {e}') from e
    if not isinstance(meta, dict) or meta.get('format') != Constants.Checkpoint.FORMAT:
        raise CheckpointCorruptException(f'{path} is not a {Constants.Checkpoint.FORMAT} file')
    if meta.get('version') != Constants.Checkpoint.VERSION:
        raise CheckpointVersionException(
            f"Checkpoint {path} has version {meta.get('version')}, expected {Constants.Checkpoint.VERSION}"
        )
    return meta, arrays


def _collect(arrays: Dict[str, np.ndarray], prefix: str, path: Path) -> list:
    count = sum(1 for key in arrays if key.startswith(prefix) and key[len(prefix):].isdigit())
    try:
        return [arrays[f'{prefix}{k}'] for k in range(count)]
    except KeyError as e:
        raise CheckpointCorruptException(f'Checkpoint {path} is missing {e}') from e


def load_checkpoint(agent: Td3Agent, detector: Optional[NoveltyDetector], path: str | Path) -> Dict[str, Any]:
    """Restore ``agent`` (and ``detector``) in place; returns the metadata."""
    path = Path(path)
    meta, arrays = read_checkpoint(path)
    for name, network in agent.networks().items():
        params = _collect(arrays, f'net/{name}/', path)
        if len(params) != len(network.parameters()):
            raise ShapeMismatchException(
                f'{name}: checkpoint has {len(params)} parameter arrays, network has {len(network.parameters())}'
            )
        network.load_parameters(params)
    for name, (optimizer, _) in agent.optimizers().items():
        optimizer.load_state(
            meta['optimizers'][name],
            _collect(arrays, f'opt/{name}/m/', path),
            _collect(arrays, f'opt/{name}/v/', path),
        )
    agent.step = int(meta['step'])

    if detector is not None:
        if meta.get('detector') is None:
            raise CheckpointException(f'Checkpoint {path} holds no novelty detector')
        detector.load_state_dict({
            **meta['detector'],
            'ids': arrays['detector/ids'],
            'states': arrays['detector/states'],
        })
    logger.debug(f"Loaded checkpoint {path} at step {agent.step}")
    return meta


def load_checkpoint_agent(path: str | Path) -> Tuple[Td3Agent, Optional[NoveltyDetector], Optional[RunConfig]]:
    """Rebuild agent, detector and run configuration from a checkpoint alone."""
    meta, _ = read_checkpoint(path)
    agent = Td3Agent(Td3Config.model_validate(meta['td3']))
    detector = None
    if meta.get('detector') is not None:
        detector = NoveltyDetector(NoveltyConfig.model_validate(meta['detector']['config']))
    load_checkpoint(agent, detector, path)
    run_config = RunConfig.model_validate(meta['run']) if meta.get('run') else None
    return agent, detector, run_config
