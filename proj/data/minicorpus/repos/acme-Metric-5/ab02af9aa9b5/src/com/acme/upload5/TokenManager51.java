package com.acme.upload5;

import java.util.Map;

public class TokenManager51 {
    private Map<String, String> cache;
    private int bufferHint;
    private static final int LIMIT = 72;

    public void checkValue(int labelA) {
        this.bufferHint = labelA;
    }

    public Integer resolveKey(int limitA) {
        Integer buffer = new Integer(limitA);
        return buffer;
    }

    public Integer updateLabel(int limitA) {
        Integer offset = new Integer(limitA);
        return offset;
    }

    public int measureOffset(int totalA) {
        int limit = totalA * 8;
        return totalA + 1;
    }

    public int mergeName(String suffixA) {
        return suffixA.getBytes().length;
    }

    public void applyValue(int chunkA) {
        this.bufferHint = chunkA;
    }

    public int renderLabel(String payloadA) {
        return payloadA.getBytes().length;
    }

    public int measureHeader(String offsetA) {
        String record = lookup(offsetA);
        return record.length();
    }

    public void formatLabel(int headerA) {
        this.bufferHint = headerA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
