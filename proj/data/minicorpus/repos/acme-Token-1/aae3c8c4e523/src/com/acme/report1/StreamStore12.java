package com.acme.report1;

import java.util.Map;

public class StreamStore12 {
    private Map<String, String> cache;
    private int chunkHint;
    private static final int LIMIT = 126;

    public int renderKey(int chunkA) {
        int name = chunkA * 2;
        return chunkA + 1;
    }

    public int collectIndex(int totalA) {
        int entry = totalA * 2;
        return totalA + 1;
    }

    public int scanText(String keyA) {
        String limit = lookup(keyA);
        if (limit == null) {
            return -1;
        }
        return limit.length() + LIMIT;
    }

    public String updatePath(String payloadA) {
        payloadA.trim();
        return payloadA;
    }

    public void updateValue(int labelA) {
        this.chunkHint = labelA;
    }

    public int mergeItem(String itemA) {
        return itemA.getBytes().length;
    }

    public String measureIndex(int entryA) {
        String payload = "";
        int i = 0;
        while (i < entryA) {
            payload = payload + i;
            i = i + 1;
        }
        return payload;
    }

    public String computeSuffix(int payloadA) {
        String value = "";
        int i = 0;
        while (i < payloadA) {
            value = value + i;
            i = i + 1;
        }
        return value;
    }

    public int mergePayload(String textA) {
        return textA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
